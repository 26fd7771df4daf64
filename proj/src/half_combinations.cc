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

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "oasym/errors.h"
#include "oasym/glp_search.h"

namespace oasym {
namespace {

// Sort key matching lexicographic order of factor lists for |l| <= 2.
int LabelKey(SubsetLabel l) {
  const std::vector<int> f = LabelFactors(l);
  return f[0] * 32 + (f.size() > 1 ? f[1] : 0);
}

bool LabelLess(SubsetLabel a, SubsetLabel b) {
  if (LabelSize(a) != LabelSize(b)) return LabelSize(a) > LabelSize(b);
  return LabelKey(a) < LabelKey(b);
}

bool TupleLess(const std::array<SubsetLabel, 4>& a,
               const std::array<SubsetLabel, 4>& b) {
  for (int i = 0; i < 4; ++i) {
    if (a[i] != b[i]) return LabelLess(a[i], b[i]);
  }
  return false;
}

struct TupleOrder {
  bool operator()(const std::array<SubsetLabel, 4>& a,
                  const std::array<SubsetLabel, 4>& b) const {
    const int sa = SupportSize(a);
    const int sb = SupportSize(b);
    if (sa != sb) return sa < sb;
    return TupleLess(a, b);
  }
};

SubsetLabel Relabel(SubsetLabel l, const std::vector<int>& to) {
  SubsetLabel out = 0;
  for (int f : LabelFactors(l)) out |= SubsetLabel{1} << (to[f] - 1);
  return out;
}

std::array<bool, kSignRows> ViableRows(int k, const std::array<SubsetLabel, 4>& labels) {
  std::array<bool, kSignRows> viable{};
  for (int r = 0; r < kSignRows; ++r) {
    viable[r] = IsViableCombination(HalfCombo{k, labels, SignRow(r)});
  }
  return viable;
}

}  // namespace

std::array<int, 4> SignRow(int row) {
  if (row < 0 || row >= kSignRows) throw DomainError("sign row out of range");
  std::array<int, 4> s{1, 1, 1, 1};
  for (int j = 0; j < 3; ++j) {
    if ((row >> j) & 1) s[j + 1] = -1;
  }
  return s;
}

std::vector<int> DoubledCombination(const HalfCombo& combo) {
  CheckFactorCount(combo.k);
  std::vector<int> v(NumPoints(combo.k), 0);
  for (int i = 0; i < 4; ++i) {
    if (combo.labels[i] >= NumPoints(combo.k)) {
      throw DomainError("combination label uses factors beyond k");
    }
    for (PointIndex p = 0; p < v.size(); ++p) {
      v[p] += combo.signs[i] * InteractionSign(combo.labels[i], p);
    }
  }
  return v;
}

bool IsViableCombination(const HalfCombo& combo) {
  for (int e : DoubledCombination(combo)) {
    if (e != 2 && e != -2) return false;
  }
  return true;
}

bool PassesMinMaxScreen(const HalfCombo& combo) {
  const std::vector<int> v = DoubledCombination(combo);
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo == -2 && *hi == 2;
}

std::array<SubsetLabel, 4> OrderLabels(std::array<SubsetLabel, 4> labels) {
  std::sort(labels.begin(), labels.end(), LabelLess);
  return labels;
}

int SupportSize(const std::array<SubsetLabel, 4>& labels) {
  return LabelSize(labels[0] | labels[1] | labels[2] | labels[3]);
}

std::array<SubsetLabel, 4> CanonicalLabels(const std::array<SubsetLabel, 4>& labels) {
  const std::vector<int> support =
      LabelFactors(labels[0] | labels[1] | labels[2] | labels[3]);
  if (support.size() > 8) throw DomainError("support larger than 8 factors");
  // Try every bijection of the support onto {1, ..., s}.
  std::vector<int> targets(support.size());
  std::iota(targets.begin(), targets.end(), 1);
  std::array<SubsetLabel, 4> best = OrderLabels(labels);
  bool have_best = false;
  std::vector<int> to(kMaxFactors + 1, 0);
  do {
    for (size_t i = 0; i < support.size(); ++i) to[support[i]] = targets[i];
    std::array<SubsetLabel, 4> mapped;
    for (int i = 0; i < 4; ++i) mapped[i] = Relabel(labels[i], to);
    mapped = OrderLabels(mapped);
    if (!have_best || TupleLess(mapped, best)) {
      best = mapped;
      have_best = true;
    }
  } while (std::next_permutation(targets.begin(), targets.end()));
  return best;
}

std::string ComboName(const std::array<SubsetLabel, 4>& labels) {
  std::string name;
  for (int i = 0; i < 4; ++i) {
    if (i > 0) name += '.';
    for (int f : LabelFactors(labels[i])) name += std::to_string(f);
  }
  return name;
}

bool FamilySignRule(const std::array<SubsetLabel, 4>& labels,
                    const std::array<int, 4>& signs) {
  if (!IsHalfFourFamily(labels)) return false;
  std::vector<int> pair_idx;
  for (int i = 0; i < 4; ++i) {
    if (LabelSize(labels[i]) == 2) pair_idx.push_back(i);
  }
  const SubsetLabel shared = labels[pair_idx[0]] & labels[pair_idx[1]];
  auto sign_of = [&](SubsetLabel l) {
    for (int i = 0; i < 4; ++i) {
      if (labels[i] == l) return signs[i];
    }
    return 0;
  };
  const SubsetLabel ab = labels[pair_idx[0]];
  const SubsetLabel ac = labels[pair_idx[1]];
  const bool first = sign_of(ab & ~shared) == sign_of(ab);
  const bool second = sign_of(ac & ~shared) == sign_of(ac);
  return first != second;
}

HalfComboReport ClassifyHalfCombinations(int k) {
  if (k < 3 || k > 6) {
    throw DomainError("half-combination classification needs 3 <= k <= 6");
  }
  std::vector<SubsetLabel> candidates;
  for (SubsetLabel l = 1; l < NumPoints(k); ++l) {
    if (LabelSize(l) <= 2) candidates.push_back(l);
  }

  HalfComboReport report;
  report.k = k;
  std::map<std::array<SubsetLabel, 4>, HalfComboClass, TupleOrder> classes;
  const size_t m = candidates.size();
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = a + 1; b < m; ++b) {
      for (size_t c = b + 1; c < m; ++c) {
        for (size_t d = c + 1; d < m; ++d) {
          std::array<SubsetLabel, 4> set{candidates[a], candidates[b],
                                         candidates[c], candidates[d]};
          if (std::none_of(set.begin(), set.end(),
                           [](SubsetLabel l) { return LabelSize(l) == 2; })) {
            continue;
          }
          const std::array<SubsetLabel, 4> ordered = OrderLabels(set);
          const bool in_family = IsHalfFourFamily(ordered);
          ++report.num_label_sets;
          bool any_viable = false;
          for (int r = 0; r < kSignRows; ++r) {
            const HalfCombo combo{k, ordered, SignRow(r)};
            const bool viable = IsViableCombination(combo);
            ++report.num_combinations;
            if (viable != PassesMinMaxScreen(combo)) report.screens_agree = false;
            if (viable) {
              ++report.num_viable;
              any_viable = true;
              if (!in_family) report.viable_only_in_family = false;
            }
            if (in_family && FamilySignRule(ordered, combo.signs) != viable) {
              report.sign_rule_holds = false;
            }
          }
          if (in_family && !any_viable) report.family_all_have_viable = false;

          const std::array<SubsetLabel, 4> canonical = CanonicalLabels(ordered);
          auto [it, inserted] = classes.try_emplace(canonical);
          if (inserted) {
            HalfComboClass& cls = it->second;
            cls.name = ComboName(canonical);
            cls.representative = canonical;
            cls.support = SupportSize(canonical);
            cls.viable = ViableRows(k, canonical);
            cls.in_family = IsHalfFourFamily(canonical);
          }
          ++it->second.num_label_sets;
        }
      }
    }
  }
  for (auto& [key, cls] : classes) report.classes.push_back(std::move(cls));
  return report;
}

std::vector<TabulatedCase> TabulatedCases() {
  static const char* const kNames[] = {
      // one interaction
      "12.1.2.3", "12.1.3.4", "12.3.4.5",
      // two interactions
      "12.13.1.2", "12.13.1.4", "12.13.2.3", "12.13.2.4", "12.13.4.5",
      "12.34.1.2", "12.34.1.3", "12.34.1.5", "12.34.5.6",
      // three interactions
      "12.13.14.1", "12.13.14.2", "12.13.14.5", "12.13.23.1", "12.13.23.4",
      "12.13.24.1", "12.13.24.3", "12.13.24.5", "12.13.45.1", "12.13.45.2",
      "12.13.45.5", "12.13.45.6", "12.34.56.1", "12.34.56.7",
      // four interactions
      "12.13.14.15", "12.13.14.23", "12.13.14.25", "12.13.14.56",
      "12.13.23.45", "12.13.24.35", "12.13.24.56", "12.13.45.56",
      "12.13.45.67", "12.34.56.78",
  };
  std::vector<TabulatedCase> cases;
  for (const char* name : kNames) {
    TabulatedCase c;
    c.name = name;
    std::istringstream in(name);
    std::string token;
    int i = 0;
    SubsetLabel all = 0;
    while (std::getline(in, token, '.')) {
      std::vector<int> factors;
      for (char ch : token) factors.push_back(ch - '0');
      c.labels[i++] = LabelFromFactors(factors);
      all |= c.labels[i - 1];
    }
    c.num_factors = std::bit_width(all);
    c.viable = ViableRows(c.num_factors, c.labels);
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace oasym
