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


#include "oasym/half_combinations.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oasym/errors.h"

namespace oasym {
namespace {

using Labels = std::array<SubsetLabel, 4>;

// --- Independent oracle -----------------------------------------------------

bool ViableByEntries(int k, const Labels& labels, const std::array<int, 4>& signs) {
  for (PointIndex p = 0; p < NumPoints(k); ++p) {
    int twice = 0;
    for (int i = 0; i < 4; ++i) twice += signs[i] * InteractionSign(labels[i], p);
    if (twice != 2 && twice != -2) return false;
  }
  return true;
}

std::vector<SubsetLabel> Candidates(int k) {
  std::vector<SubsetLabel> out;
  for (SubsetLabel l = 1; l < NumPoints(k); ++l) {
    if (LabelSize(l) <= 2) out.push_back(l);
  }
  return out;
}

std::vector<Labels> LabelSets(int k) {
  const std::vector<SubsetLabel> c = Candidates(k);
  std::vector<Labels> out;
  for (size_t a = 0; a < c.size(); ++a)
    for (size_t b = a + 1; b < c.size(); ++b)
      for (size_t d = b + 1; d < c.size(); ++d)
        for (size_t e = d + 1; e < c.size(); ++e) {
          const Labels s = {c[a], c[b], c[d], c[e]};
          if (std::any_of(s.begin(), s.end(), [](SubsetLabel l) { return LabelSize(l) == 2; })) {
            out.push_back(s);
          }
        }
  return out;
}

// {x_ab, x_ac, x_b, x_c}: two pairs sharing exactly one factor, plus the two
// unshared factors as main effects.
bool IsFamily(const Labels& s) {
  std::vector<SubsetLabel> pairs, mains;
  for (SubsetLabel l : s) (LabelSize(l) == 2 ? pairs : mains).push_back(l);
  if (pairs.size() != 2) return false;
  const SubsetLabel shared = pairs[0] & pairs[1];
  return LabelSize(shared) == 1 && (pairs[0] ^ pairs[1]) == (mains[0] | mains[1]);
}

// Four pairs whose product is the all-ones column: every factor used twice.
bool IsFourCycle(const Labels& s) {
  SubsetLabel parity = 0;
  SubsetLabel support = 0;
  for (SubsetLabel l : s) {
    if (LabelSize(l) != 2) return false;
    parity ^= l;
    support |= l;
  }
  return parity == 0 && LabelSize(support) == 4;
}

Labels Relabel(const Labels& s, const std::vector<int>& perm) {
  Labels out{};
  for (int i = 0; i < 4; ++i) {
    for (int f = 0; f < static_cast<int>(perm.size()); ++f) {
      if (s[i] >> f & 1) out[i] |= SubsetLabel{1} << perm[f];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of label-set orbits under factor relabeling.
size_t OrbitCount(int k, const std::vector<Labels>& sets) {
  std::set<Labels> seen;
  size_t orbits = 0;
  for (const Labels& s : sets) {
    Labels sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (seen.contains(sorted)) continue;
    ++orbits;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      seen.insert(Relabel(s, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return orbits;
}

std::array<int, 4> Signs(int row) {
  return {1, (row & 1) ? -1 : 1, (row & 2) ? -1 : 1, (row & 4) ? -1 : 1};
}

// --- Tests ------------------------------------------------------------------

TEST(SignRowTest, Order) {
  for (int r = 0; r < kSignRows; ++r) EXPECT_EQ(SignRow(r), Signs(r));
}

class ExhaustiveTest : public ::testing::TestWithParam<int> {};

TEST_P(ExhaustiveTest, ReportMatchesOracle) {
  const int k = GetParam();
  const std::vector<Labels> sets = LabelSets(k);
  size_t viable = 0;
  for (const Labels& s : sets) {
    size_t rows = 0;
    for (int r = 0; r < kSignRows; ++r) {
      const HalfCombo combo{k, s, Signs(r)};
      const bool oracle = ViableByEntries(k, s, Signs(r));
      EXPECT_EQ(IsViableCombination(combo), oracle);
      EXPECT_EQ(PassesMinMaxScreen(combo), oracle);
      if (oracle) ++rows;
    }
    viable += rows;
    // Viable sets are the family and the 4-cycles, each with 4 sign rows.
    if (IsFamily(s) || IsFourCycle(s)) {
      EXPECT_EQ(rows, 4u);
    } else {
      EXPECT_EQ(rows, 0u);
    }
  }
  const HalfComboReport report = ClassifyHalfCombinations(k);
  EXPECT_EQ(report.num_label_sets, sets.size());
  EXPECT_EQ(report.num_combinations, sets.size() * kSignRows);
  EXPECT_EQ(report.num_viable, viable);
  EXPECT_EQ(report.classes.size(), OrbitCount(k, sets));
  size_t total = 0;
  for (const HalfComboClass& c : report.classes) total += c.num_label_sets;
  EXPECT_EQ(total, sets.size());
  EXPECT_TRUE(report.screens_agree);
  EXPECT_TRUE(report.family_all_have_viable);
  EXPECT_TRUE(report.sign_rule_holds);
  // The family alone exhausts the viable sets only when no 4-cycle fits.
  EXPECT_EQ(report.viable_only_in_family, k < 4);
}

INSTANTIATE_TEST_SUITE_P(K, ExhaustiveTest, ::testing::Values(3, 4, 5));

TEST(SignRuleTest, FamilyRuleMatchesOracle) {
  // Closed form: (s3 = s1 and s4 = -s2) or (s3 = -s1 and s4 = s2), signs in the
  // order (x_ab, x_ac, x_b, x_c).
  const Labels family = {0b011, 0b101, 0b010, 0b100};
  for (int r = 0; r < kSignRows; ++r) {
    const std::array<int, 4> s = Signs(r);
    const bool closed = (s[2] == s[0] && s[3] == -s[1]) || (s[2] == -s[0] && s[3] == s[1]);
    EXPECT_EQ(ViableByEntries(3, family, s), closed);
    EXPECT_EQ(FamilySignRule(family, s), closed);
  }
  EXPECT_FALSE(FamilySignRule({0b011, 0b101, 0b001, 0b100}, Signs(1)));
}

TEST(SignRuleTest, FourCycleNeedsOddMinusCount) {
  const Labels cycle = {0b0011, 0b0101, 0b1010, 0b1100};  // 12.13.24.34
  for (int r = 0; r < kSignRows; ++r) {
    const std::array<int, 4> s = Signs(r);
    EXPECT_EQ(ViableByEntries(4, cycle, s), s[0] * s[1] * s[2] * s[3] == -1);
  }
}

TEST(CanonicalTest, NamesAndInvariance) {
  EXPECT_EQ(ComboName(OrderLabels({0b100, 0b101, 0b010, 0b011})), "12.13.2.3");
  EXPECT_EQ(ComboName(CanonicalLabels({0b1100, 0b0110, 0b0010, 0b1000})), "12.13.2.3");
  EXPECT_EQ(SupportSize({0b0011, 0b1100, 0b0001, 0b10000}), 5);
  const Labels s = {0b00110, 0b01010, 0b10000, 0b00010};
  const Labels canonical = CanonicalLabels(s);
  std::vector<int> perm = {0, 1, 2, 3, 4};
  do {
    EXPECT_EQ(CanonicalLabels(Relabel(s, perm)), canonical);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(TabulatedCasesTest, OnlyTheFamilyCaseIsViable) {
  const std::array<bool, kSignRows> family_rows = {false, true, true, false,
                                                   true, false, false, true};
  const std::vector<TabulatedCase> cases = TabulatedCases();
  EXPECT_EQ(cases.size(), 36u);
  for (const TabulatedCase& a : cases) {
    std::array<bool, kSignRows> oracle{};
    for (int r = 0; r < kSignRows; ++r) {
      oracle[r] = ViableByEntries(std::max(3, a.num_factors), a.labels, Signs(r));
    }
    EXPECT_EQ(a.viable, oracle) << a.name;
    if (a.name == "12.13.2.3") {
      EXPECT_EQ(a.viable, family_rows);
    } else {
      const std::array<bool, kSignRows> none{};
      EXPECT_EQ(a.viable, none) << a.name;
    }
  }
}

TEST(TabulatedCasesTest, CoversEveryClassExceptTheFourCycle) {
  std::set<std::string> listed;
  for (const TabulatedCase& a : TabulatedCases()) {
    listed.insert(ComboName(CanonicalLabels(a.labels)));
  }
  EXPECT_EQ(listed.size(), 36u);  // no two cases in one class
  std::set<std::string> exhaustive;
  for (int k = 3; k <= 6; ++k) {
    for (const HalfComboClass& c : ClassifyHalfCombinations(k).classes) {
      exhaustive.insert(c.name);
    }
  }
  std::set<std::string> missing;
  for (const std::string& name : exhaustive) {
    if (!listed.contains(name)) missing.insert(name);
  }
  EXPECT_EQ(missing, std::set<std::string>{"12.13.24.34"});
  // Listed classes beyond six factors: support 7 and 8.
  size_t beyond = 0;
  for (const std::string& name : listed) beyond += exhaustive.contains(name) ? 0 : 1;
  EXPECT_EQ(beyond, 3u);
}

TEST(ClassifyTest, RejectsOutOfRange) {
  EXPECT_THROW(ClassifyHalfCombinations(2), DomainError);
  EXPECT_THROW(ClassifyHalfCombinations(7), DomainError);
}

}  // namespace
}  // namespace oasym
