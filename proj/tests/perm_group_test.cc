// Copyright 2026 The oasym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "oasym/perm_group.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

namespace oasym {
namespace {

// Oracle: closure of the generators by breadth-first multiplication.
std::set<Permutation> Closure(size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::Identity(n)};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& g : gens) {
        Permutation y = Compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

Permutation RandomPerm(std::mt19937& rng, size_t n) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

Permutation Cycle(size_t n, std::vector<uint32_t> cycle) {
  const std::vector<std::vector<uint32_t>> cycles = {std::move(cycle)};
  return Permutation::FromCycles(n, cycles);
}

TEST(PermGroupTest, SymmetricGroupOrders) {
  for (size_t n = 2; n <= 10; ++n) {
    std::vector<uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    const PermGroup g(n, {Cycle(n, {0, 1}), Cycle(n, all)});
    BigInt fact = 1;
    for (size_t i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(g.order(), fact) << "n=" << n;
  }
}

TEST(PermGroupTest, TrivialAndEmpty) {
  EXPECT_EQ(GroupOrder({}), 1);
  const PermGroup g(5, {Permutation::Identity(5)});
  EXPECT_EQ(g.order(), 1);
  EXPECT_TRUE(g.Contains(Permutation::Identity(5)));
  EXPECT_FALSE(g.Contains(Cycle(5, {0, 1})));
}

TEST(PermGroupTest, RandomSubgroupsMatchClosureOracle) {
  std::mt19937 rng(2026);
  const size_t n = 8;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Permutation> gens = {RandomPerm(rng, n), RandomPerm(rng, n)};
    // Bias toward proper subgroups: sometimes use an involution and a cycle.
    if (trial % 2 == 1) {
      gens[0] = Cycle(n, {0, 1});
      gens[1] = Cycle(n, {2, 3, 4, 5});
    }
    if (trial % 4 == 3) gens[1] = Cycle(n, {1, 2, 3});
    const std::set<Permutation> closure = Closure(n, gens);
    const PermGroup g(n, gens);
    ASSERT_EQ(g.order(), closure.size()) << "trial " << trial;
    // Membership agrees with the oracle on random elements of S_8.
    for (int probe = 0; probe < 200; ++probe) {
      const Permutation p = RandomPerm(rng, n);
      EXPECT_EQ(g.Contains(p), closure.contains(p));
    }
    for (const Permutation& p : closure) EXPECT_TRUE(g.Contains(p));
    BigInt product = 1;
    for (size_t s : g.TransversalSizes()) product *= s;
    EXPECT_EQ(product, g.order());
  }
}

TEST(PermGroupTest, ForEachElementVisitsClosure) {
  const size_t n = 6;
  const std::vector<Permutation> gens = {Cycle(n, {0, 1, 2}), Cycle(n, {3, 4}),
                                         Cycle(n, {0, 3})};
  const std::set<Permutation> closure = Closure(n, gens);
  std::set<Permutation> visited;
  PermGroup(n, gens).ForEachElement([&](const Permutation& p) {
    EXPECT_TRUE(visited.insert(p).second);
    return true;
  });
  EXPECT_EQ(visited, closure);
}

TEST(PermGroupTest, ForEachElementStopsEarly) {
  size_t seen = 0;
  PermGroup(5, {Cycle(5, {0, 1}), Cycle(5, {0, 1, 2, 3, 4})})
      .ForEachElement([&](const Permutation&) { return ++seen < 7; });
  EXPECT_EQ(seen, 7u);
}

TEST(PermGroupTest, OrbitsAndDeterministicBase) {
  const size_t n = 7;
  const std::vector<Permutation> gens = {Cycle(n, {1, 2}), Cycle(n, {2, 3, 4})};
  const PermGroup a(n, gens);
  const PermGroup b(n, gens);
  EXPECT_EQ(a.base(), b.base());
  EXPECT_EQ(a.Orbit(1), (std::vector<uint32_t>{1, 2, 3, 4}));
  EXPECT_EQ(a.Orbit(6), (std::vector<uint32_t>{6}));
  EXPECT_THROW(a.Contains(Permutation::Identity(3)), DomainError);
}

TEST(OrbitOfVectorTest, CountsDistinctImages) {
  const size_t n = 4;
  const std::vector<Permutation> gens = {Cycle(n, {0, 1, 2, 3}), Cycle(n, {0, 1})};
  const std::vector<int> v = {2, 1, 1, 0};
  const VectorOrbit<int> orbit = OrbitOfVector<int>(v, gens);
  EXPECT_EQ(orbit.members.size(), 12u);  // 4!/2!
  EXPECT_EQ(orbit.representative, (std::vector<int>{0, 1, 1, 2}));
  EXPECT_THROW(OrbitOfVector<int>(v, gens, 5), ResourceError);
}

}  // namespace
}  // namespace oasym
