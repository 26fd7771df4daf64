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


#include "oasym/automorphism_search.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oasym/perm_group.h"

namespace oasym {
namespace {

// Oracle: all automorphisms by trying every permutation.
std::vector<Permutation> AllAutomorphisms(const ColoredGraph& g) {
  std::vector<uint32_t> img(g.size());
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Permutation> out;
  do {
    Permutation p(img);
    if (g.IsAutomorphism(p)) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

ColoredGraph RandomGraph(std::mt19937& rng, size_t n, int colors) {
  std::vector<int64_t> c(n * n);
  for (size_t i = 0; i < n; ++i) {
    c[i * n + i] = 100 + static_cast<int64_t>(rng() % 2);
    for (size_t j = i + 1; j < n; ++j) {
      c[i * n + j] = c[j * n + i] = static_cast<int64_t>(rng() % colors);
    }
  }
  return ColoredGraph(n, c);
}

// Colors depending only on a point function: lots of symmetry.
ColoredGraph LayeredGraph(size_t n, size_t layers) {
  std::vector<int64_t> c(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      c[i * n + j] = i == j ? -1 : static_cast<int64_t>((i % layers) + (j % layers));
    }
  }
  return ColoredGraph(n, c);
}

TEST(ColoredGraphTest, RejectsAsymmetricInput) {
  EXPECT_THROW(ColoredGraph(2, {0, 1, 2, 0}), DomainError);
  EXPECT_THROW(ColoredGraph(2, {0, 1, 1}), DomainError);
}

TEST(AutomorphismSearchTest, MatchesExhaustiveOracle) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t n = 3 + rng() % 5;
    const ColoredGraph g = trial % 3 == 0 ? LayeredGraph(n, 1 + rng() % 3)
                                          : RandomGraph(rng, n, 1 + trial % 3);
    const std::vector<Permutation> all = AllAutomorphisms(g);
    const AutomorphismSearchOutcome found = FindAutomorphisms(g, 1'000'000);
    ASSERT_FALSE(found.budget_exhausted);
    for (const Permutation& p : found.generators) EXPECT_TRUE(g.IsAutomorphism(p));
    const PermGroup group(n, found.generators);
    EXPECT_EQ(group.order(), all.size()) << "trial " << trial;
    for (const Permutation& p : all) EXPECT_TRUE(group.Contains(p));
  }
}

TEST(AutomorphismSearchTest, CompleteGraphIsSymmetric) {
  const size_t n = 9;
  std::vector<int64_t> c(n * n, 1);
  for (size_t i = 0; i < n; ++i) c[i * n + i] = 0;
  const AutomorphismSearchOutcome found = FindAutomorphisms(ColoredGraph(n, c), 1'000'000);
  EXPECT_EQ(GroupOrder(found.generators), 362880);
}

TEST(AutomorphismSearchTest, BudgetYieldsSubgroup) {
  const size_t n = 9;
  std::vector<int64_t> c(n * n, 1);
  for (size_t i = 0; i < n; ++i) c[i * n + i] = 0;
  const ColoredGraph g(n, c);
  const AutomorphismSearchOutcome found = FindAutomorphisms(g, 5);
  EXPECT_TRUE(found.budget_exhausted);
  for (const Permutation& p : found.generators) EXPECT_TRUE(g.IsAutomorphism(p));
  EXPECT_LT(GroupOrder(found.generators), 362880);
}

TEST(AutomorphismSearchTest, DeterministicOutput) {
  std::mt19937 rng(1);
  const ColoredGraph g = LayeredGraph(8, 2);
  const AutomorphismSearchOutcome a = FindAutomorphisms(g, 1'000'000);
  const AutomorphismSearchOutcome b = FindAutomorphisms(g, 1'000'000);
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(a.stats.base, b.stats.base);
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

}  // namespace
}  // namespace oasym
