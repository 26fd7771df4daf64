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


#include "oasym/symgen.h"

#include <gtest/gtest.h>

#include "oasym/errors.h"
#include "oasym/ilp_model.h"

namespace oasym {
namespace {

std::vector<int> Pullback(const Permutation& p, int k, SubsetLabel l) {
  const std::vector<int> col = InteractionColumn(k, l);
  return PermuteVector<int>(p, col);
}

std::vector<int> Negated(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

SubsetLabel Bit(int factor) { return SubsetLabel{1} << (factor - 1); }

TEST(SymgenTest, ColumnActions) {
  const int k = 4;
  for (int i = 1; i <= k; ++i) {
    EXPECT_EQ(Pullback(SignFlipPerm(i, k), k, Bit(i)), Negated(InteractionColumn(k, Bit(i))));
    for (int j = 1; j <= k; ++j) {
      if (j == i) continue;
      EXPECT_EQ(Pullback(SignFlipPerm(i, k), k, Bit(j)), InteractionColumn(k, Bit(j)));
      // rho_i fixes x_i and sends x_j to x_i x_j.
      EXPECT_EQ(Pullback(RhoPerm(i, k), k, Bit(j)), InteractionColumn(k, Bit(i) | Bit(j)));
      if (i < j) {
        EXPECT_EQ(Pullback(FactorSwapPerm(i, j, k), k, Bit(i)), InteractionColumn(k, Bit(j)));
      }
    }
    EXPECT_EQ(Pullback(RhoPerm(i, k), k, Bit(i)), InteractionColumn(k, Bit(i)));
  }
}

TEST(SymgenTest, RejectsBadArguments) {
  EXPECT_THROW(SignFlipPerm(0, 3), DomainError);
  EXPECT_THROW(SignFlipPerm(4, 3), DomainError);
  EXPECT_THROW(FactorSwapPerm(2, 2, 3), DomainError);
  EXPECT_THROW(FactorSwapPerm(3, 1, 3), DomainError);
  EXPECT_THROW(RhoPerm(5, 4), DomainError);
  EXPECT_THROW(Strength2Generators(1), DomainError);
  EXPECT_THROW(ParseGeneratorKind("full"), DomainError);
  EXPECT_EQ(ParseGeneratorKind("strength2"), GeneratorKind::kStrength2);
  EXPECT_EQ(GeneratorKindName(GeneratorKind::kWreath), "wreath");
}

TEST(SymgenTest, WreathOrdersAndRowspace) {
  BigInt expected = 1;
  for (int k = 1; k <= 6; ++k) {
    expected *= 2 * k;
    const GeneratorSet gens = WreathGenerators(k);
    EXPECT_EQ(gens.claimed_order, expected);
    EXPECT_EQ(GroupOrder(gens.perms), expected);
    for (int t = 1; t <= k; ++t) {
      const GramProjection q(k, t);
      for (const Permutation& g : gens.perms) EXPECT_TRUE(PermPreservesRowspace(g, q));
    }
  }
}

TEST(SymgenTest, Strength2OrdersAndContainment) {
  for (int k = 2; k <= 6; ++k) {
    const GeneratorSet gens = Strength2Generators(k);
    BigInt expected = BigInt(1) << k;
    for (int i = 2; i <= k + 1; ++i) expected *= i;
    EXPECT_EQ(GroupOrder(gens.perms), expected) << "k=" << k;
    const PermGroup group(NumPoints(k), gens.perms);
    for (const Permutation& w : WreathGenerators(k).perms) EXPECT_TRUE(group.Contains(w));
    const GramProjection q(k, 2);
    for (const Permutation& g : gens.perms) EXPECT_TRUE(PermPreservesRowspace(g, q));
  }
}

TEST(SymgenTest, GeneratorsPreserveLowOrderColumns) {
  // Each generator pulls a column of order <= 2 back to +- a column of order
  // <= 2, the property behind Hadamard-product preservation.
  for (int k = 2; k <= 6; ++k) {
    for (const Permutation& g : Strength2Generators(k).perms) {
      for (SubsetLabel l = 0; l < NumPoints(k); ++l) {
        if (LabelSize(l) > 2) continue;
        const std::vector<int> image = Pullback(g, k, l);
        bool found = false;
        for (SubsetLabel m = 0; m < NumPoints(k) && !found; ++m) {
          if (LabelSize(m) > 2) continue;
          const std::vector<int> col = InteractionColumn(k, m);
          found = image == col || image == Negated(col);
        }
        EXPECT_TRUE(found) << "k=" << k << " label " << LabelName(l);
      }
    }
  }
}

TEST(SymgenTest, RhoRelations) {
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i <= k; ++i) {
      const Permutation ri = RhoPerm(i, k);
      EXPECT_TRUE(Compose(ri, ri).IsIdentity());
      for (int j = i + 1; j <= k; ++j) {
        EXPECT_EQ(Compose(ri, Compose(RhoPerm(j, k), ri)), FactorSwapPerm(i, j, k));
      }
    }
  }
}

TEST(SymgenTest, RhoOnOtherStrengthsIsMeasuredOnly) {
  // Exploratory: record which strengths rho_1 preserves without asserting
  // beyond t = 2. Strength k is trivially preserved (M is square).
  for (int k = 2; k <= 6; ++k) {
    std::string preserved;
    for (int t = 1; t <= k; ++t) {
      if (PermPreservesRowspace(RhoPerm(1, k), k, t)) preserved += std::to_string(t);
    }
    EXPECT_NE(preserved.find('2'), std::string::npos);
    EXPECT_NE(preserved.find(std::to_string(k)), std::string::npos);
    RecordProperty("rho_strengths_k" + std::to_string(k), preserved);
  }
}

}  // namespace
}  // namespace oasym
