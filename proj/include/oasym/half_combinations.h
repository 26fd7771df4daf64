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

// Which combinations 1/2 (s1 x_a + s2 x_b + s3 x_c + s4 x_d) of four distinct
// main effects / two-factor interactions are again +-1 vectors?
//
// A strength-2 LP symmetry maps every main effect to a +-1 vector of Row(M),
// so only "viable" combinations can be images. A combination is viable iff
// every entry is +-1. Because the four columns are orthogonal, the squared
// norm of the combination is exactly 2^k, so "all entries in {-1, 0, 1} with
// min -1 and max 1" (the classic min/max screen) is the same condition.
//
// Sign patterns are listed in the order (+, s2, s3, s4) with s2 varying
// fastest, row r having s_{j+2} = -1 iff bit j of r is set. Labels inside a
// combination are ordered interactions first, then main effects, each in
// lexicographic order; a combination class is named after its canonical
// relabeling, e.g. "12.13.2.3" for {x_12, x_13, x_2, x_3}.

#ifndef OASYM_HALF_COMBINATIONS_H_
#define OASYM_HALF_COMBINATIONS_H_

#include <array>
#include <string>
#include <vector>

#include "oasym/factorial.h"

namespace oasym {

inline constexpr int kSignRows = 8;

struct HalfCombo {
  int k = 0;
  std::array<SubsetLabel, 4> labels{};
  std::array<int, 4> signs{1, 1, 1, 1};
};

// Signs (+1, s2, s3, s4) of sign row r in [0, 8).
std::array<int, 4> SignRow(int row);

// 2 * (the combination); entries are in {-4, -2, 0, 2, 4}.
std::vector<int> DoubledCombination(const HalfCombo& combo);

// Entrywise test: every entry of the combination is +-1.
bool IsViableCombination(const HalfCombo& combo);

// The min/max screen: min entry = -1 and max entry = 1.
bool PassesMinMaxScreen(const HalfCombo& combo);

// Interactions first, then main effects, each lexicographic.
std::array<SubsetLabel, 4> OrderLabels(std::array<SubsetLabel, 4> labels);

// Lexicographically least ordered label tuple over all relabelings of the
// factors in the support (support size at most 8).
std::array<SubsetLabel, 4> CanonicalLabels(const std::array<SubsetLabel, 4>& labels);

// "12.13.2.3" style name of an ordered label tuple.
std::string ComboName(const std::array<SubsetLabel, 4>& labels);

int SupportSize(const std::array<SubsetLabel, 4>& labels);

// Closed-form viability inside the {x_ab, x_ac, x_b, x_c} family, with
// signs given in the order of `labels`:
//   viable iff [s(x_b) = s(x_ab)] xor [s(x_c) = s(x_ac)].
// Returns false for label sets outside the family.
bool FamilySignRule(const std::array<SubsetLabel, 4>& labels,
                    const std::array<int, 4>& signs);

struct HalfComboClass {
  std::string name;
  std::array<SubsetLabel, 4> representative{};
  int support = 0;
  size_t num_label_sets = 0;   // label sets in this class for the given k
  std::array<bool, kSignRows> viable{};  // per sign row, for the representative
  bool in_family = false;
};

struct HalfComboReport {
  int k = 0;
  size_t num_label_sets = 0;
  size_t num_combinations = 0;  // label sets x sign rows
  size_t num_viable = 0;
  std::vector<HalfComboClass> classes;  // ordered by (support, name)
  // Every viable combination lies in the {x_ab, x_ac, x_b, x_c} family.
  bool viable_only_in_family = true;
  // Every family label set has at least one viable sign row.
  bool family_all_have_viable = true;
  // The entrywise test and the min/max screen agree everywhere.
  bool screens_agree = true;
  // Within the family, viability matches FamilySignRule exactly.
  bool sign_rule_holds = true;
};

// Exhaustive over all four-label sets with at least one interaction;
// 3 <= k <= 6.
HalfComboReport ClassifyHalfCombinations(int k);

// A hand-enumerated list of label sets, one per relabeling class, in the
// naming scheme above. Each is evaluated on as many factors as its name uses.
// The list predates the exhaustive classifier and lacks the 4-cycle class
// 12.13.24.34; ClassifyHalfCombinations covers it.
struct TabulatedCase {
  std::string name;
  std::array<SubsetLabel, 4> labels{};
  int num_factors = 0;
  std::array<bool, kSignRows> viable{};
};

std::vector<TabulatedCase> TabulatedCases();

}  // namespace oasym

#endif  // OASYM_HALF_COMBINATIONS_H_
