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


#include "oasym/permutation.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oasym/errors.h"

namespace oasym {
namespace {

Permutation RandomPerm(std::mt19937& rng, size_t n) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<uint32_t>{0, 0}), DomainError);
  EXPECT_THROW(Permutation(std::vector<uint32_t>{0, 2}), DomainError);
}

TEST(PermutationTest, ComposeAppliesRightFirst) {
  const Permutation a({1, 2, 0});  // 0->1->2->0
  const Permutation b({1, 0, 2});  // swap 0,1
  const Permutation ab = Compose(a, b);
  for (uint32_t i = 0; i < 3; ++i) EXPECT_EQ(ab(i), a(b(i)));
  EXPECT_THROW(Compose(a, Permutation::Identity(4)), DomainError);
}

TEST(PermutationTest, GroupAxiomsProperty) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = 1 + rng() % 12;
    const Permutation a = RandomPerm(rng, n);
    const Permutation b = RandomPerm(rng, n);
    const Permutation c = RandomPerm(rng, n);
    EXPECT_EQ(Compose(Compose(a, b), c), Compose(a, Compose(b, c)));
    EXPECT_TRUE(Compose(a, a.Inverse()).IsIdentity());
    EXPECT_TRUE(Compose(a.Inverse(), a).IsIdentity());
    EXPECT_EQ(Compose(a, Permutation::Identity(n)), a);
  }
}

TEST(PermutationTest, CyclesRoundTrip) {
  const std::vector<std::vector<uint32_t>> cycles = {{0, 3, 2}, {4, 5}};
  const Permutation p = Permutation::FromCycles(6, cycles);
  EXPECT_EQ(p(0), 3u);
  EXPECT_EQ(p(3), 2u);
  EXPECT_EQ(p(2), 0u);
  EXPECT_EQ(p(1), 1u);
  EXPECT_EQ(p.ToCycleString(), "(0 3 2)(4 5)");
  EXPECT_EQ(Permutation::Identity(3).ToCycleString(), "()");
  EXPECT_EQ(p.SmallestMovedPoint(), 0u);
  EXPECT_EQ(Permutation::Identity(3).SmallestMovedPoint(), 3u);
}

TEST(PermutationTest, PermuteVectorMovesEntryToImage) {
  const Permutation p({2, 0, 1});
  const std::vector<int> v = {10, 20, 30};
  const std::vector<int> out = PermuteVector<int>(p, v);
  EXPECT_EQ(out, (std::vector<int>{20, 30, 10}));
}

}  // namespace
}  // namespace oasym
