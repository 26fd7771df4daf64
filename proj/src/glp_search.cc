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

#include "oasym/glp_search.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oasym/automorphism_search.h"
#include "oasym/ilp_model.h"

namespace oasym {

std::string SearchMethodName(SearchMethod method) {
  return method == SearchMethod::kBrute ? "brute" : "refine";
}

SearchMethod ParseSearchMethod(const std::string& name) {
  if (name == "brute") return SearchMethod::kBrute;
  if (name == "refine") return SearchMethod::kRefine;
  throw DomainError("unknown search method: " + name);
}

AutSearchResult BruteForceGlp(int k, int t) {
  CheckModelShape(k, t);
  if (k > 3) {
    throw ResourceError("brute force is limited to k <= 3 (" +
                        std::to_string(NumPoints(k)) +
                        "! permutations); use the refine method");
  }
  const GramProjection q(k, t);
  const uint32_t n = NumPoints(k);
  std::vector<uint32_t> image(n);
  std::iota(image.begin(), image.end(), 0u);

  AutSearchResult result;
  result.k = k;
  result.t = t;
  result.method = SearchMethod::kBrute;
  uint64_t kept = 0;
  PermGroup span_so_far(n, {});
  do {
    ++result.node_count;
    const Permutation p = Permutation::FromImageUnchecked(image);
    if (!PermPreservesRowspace(p, q)) continue;
    ++kept;
    // Keep a generator only when it enlarges the group found so far.
    if (!span_so_far.Contains(p)) {
      result.generators.push_back(p);
      span_so_far = PermGroup(n, result.generators);
    }
  } while (std::next_permutation(image.begin(), image.end()));

  result.order = kept;
  if (span_so_far.order() != result.order) {
    throw std::logic_error("brute-force generators do not span the kept set");
  }
  return result;
}

AutSearchResult RefineAutomorphisms(int k, int t, uint64_t node_budget) {
  const GramProjection q(k, t);
  const ColoredGraph graph(q.dim(), q.Dense());
  AutomorphismSearchOutcome outcome = FindAutomorphisms(graph, node_budget);

  AutSearchResult result;
  result.k = k;
  result.t = t;
  result.method = SearchMethod::kRefine;
  result.node_count = outcome.stats.nodes;
  result.generators = std::move(outcome.generators);
  result.order = GroupOrder(result.generators);
  if (outcome.budget_exhausted) {
    throw SearchBudgetExceeded(
        "refinement search exceeded its node budget of " +
            std::to_string(node_budget) + "; " +
            std::to_string(result.generators.size()) +
            " generators found, order >= " + result.order.str(),
        std::move(result));
  }
  return result;
}

AutSearchResult ComputeGlp(int k, int t, SearchMethod method,
                           uint64_t node_budget) {
  return method == SearchMethod::kBrute ? BruteForceGlp(k, t)
                                        : RefineAutomorphisms(k, t, node_budget);
}

BasisExpansion ExpandInInteractionBasis(int k, std::span<const int64_t> v) {
  CheckFactorCount(k);
  if (v.size() != NumPoints(k)) throw DomainError("vector length must be 2^k");
  std::vector<int64_t> w(v.begin(), v.end());
  WalshHadamardInPlace(w);
  BasisExpansion e;
  for (SubsetLabel l = 0; l < w.size(); ++l) {
    if (w[l] != 0) e.terms.emplace_back(l, Rational(w[l], int64_t{1} << k));
  }
  return e;
}

bool IsHalfFourFamily(std::span<const SubsetLabel> labels) {
  if (labels.size() != 4) return false;
  std::vector<SubsetLabel> pairs;
  std::vector<SubsetLabel> mains;
  for (SubsetLabel l : labels) {
    if (LabelSize(l) == 2) {
      pairs.push_back(l);
    } else if (LabelSize(l) == 1) {
      mains.push_back(l);
    } else {
      return false;
    }
  }
  if (pairs.size() != 2 || mains.size() != 2 || mains[0] == mains[1]) {
    return false;
  }
  const SubsetLabel shared = pairs[0] & pairs[1];
  if (LabelSize(shared) != 1) return false;
  // The non-shared factors of the two pairs are exactly the two mains.
  return ((pairs[0] ^ pairs[1]) == (mains[0] | mains[1])) &&
         ((mains[0] | mains[1]) & shared) == 0;
}

ImageForm ClassifyExpansion(const BasisExpansion& e) {
  if (e.terms.size() == 1 && abs(e.terms[0].second) == Rational(1)) {
    return ImageForm::kSignedBasisVector;
  }
  if (e.terms.size() == 4) {
    std::vector<SubsetLabel> labels;
    for (const auto& [label, coef] : e.terms) {
      if (coef != Rational(1, 2) && coef != Rational(-1, 2)) return ImageForm::kOther;
      labels.push_back(label);
    }
    if (IsHalfFourFamily(labels)) return ImageForm::kHalfFour;
  }
  return ImageForm::kOther;
}

namespace {

void ScanElement(const Permutation& g, int k, int t, ImageFormReport* report) {
  ++report->elements_scanned;
  for (SubsetLabel l = 0; l < NumPoints(k); ++l) {
    if (LabelSize(l) > t) continue;
    std::vector<int64_t> col(NumPoints(k));
    for (PointIndex p = 0; p < col.size(); ++p) col[p] = InteractionSign(l, p);
    const std::vector<int64_t> image = PermuteVector<int64_t>(g, col);
    const BasisExpansion e = ExpandInInteractionBasis(k, image);
    ++report->images_checked;
    for (const auto& [label, coef] : e.terms) {
      if (abs(coef) != Rational(1) && abs(coef) != Rational(1, 2)) {
        report->coefficients_in_half_set = false;
      }
    }
    switch (ClassifyExpansion(e)) {
      case ImageForm::kSignedBasisVector:
        ++report->signed_images;
        if (LabelSize(l) == 1 && LabelSize(e.terms[0].first) != 1) {
          report->main_effects_to_main_effects = false;
        }
        break;
      case ImageForm::kHalfFour:
        ++report->half_four_images;
        if (LabelSize(l) == 1) {
          report->main_effects_to_main_effects = false;
          if (!report->half_four_example) {
            report->half_four_example = FormExample{g.ToCycleString(), l, e};
          }
        }
        break;
      case ImageForm::kOther:
        ++report->other_images;
        if (LabelSize(l) == 1) report->main_effects_to_main_effects = false;
        break;
    }
  }
}

}  // namespace

ImageFormReport VerifyImageForms(const AutSearchResult& glp) {
  const int k = glp.k;
  const int t = glp.t;
  if (k > 4) throw DomainError("image form verification is limited to k <= 4");
  ImageFormReport report;
  report.k = k;
  report.t = t;
  report.group_order = glp.order;
  if (glp.order <= kFormScanElementCap) {
    report.scanned_all_elements = true;
    PermGroup group(NumPoints(k), glp.generators);
    group.ForEachElement([&](const Permutation& g) {
      ScanElement(g, k, t, &report);
      return true;
    });
  } else {
    for (const Permutation& g : glp.generators) ScanElement(g, k, t, &report);
  }
  return report;
}

ImageFormReport VerifyImageForms(int k, int t) {
  CheckModelShape(k, t);
  if (k > 4) throw DomainError("image form verification is limited to k <= 4");
  return VerifyImageForms(k <= 3 ? BruteForceGlp(k, t) : RefineAutomorphisms(k, t));
}

}  // namespace oasym
