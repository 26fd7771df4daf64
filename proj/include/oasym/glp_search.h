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

// The LP-relaxation symmetry group of the OA model, computed directly.
//
// A coordinate permutation maps LP-feasible points to LP-feasible points iff
// it preserves Row(M), iff it preserves the Gram matrix Q entrywise. Both
// searches below use only that criterion: the brute-force search checks every
// permutation of 2^k <= 8 points, and the refinement search computes the
// automorphism group of Q viewed as a complete edge-colored graph.

#ifndef OASYM_GLP_SEARCH_H_
#define OASYM_GLP_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oasym/errors.h"
#include "oasym/factorial.h"
#include "oasym/perm_group.h"
#include "oasym/permutation.h"

namespace oasym {

enum class SearchMethod { kBrute, kRefine };

std::string SearchMethodName(SearchMethod method);
SearchMethod ParseSearchMethod(const std::string& name);

struct AutSearchResult {
  int k = 0;
  int t = 0;
  BigInt order;
  std::vector<Permutation> generators;
  SearchMethod method = SearchMethod::kRefine;
  uint64_t node_count = 0;
};

inline constexpr uint64_t kDefaultNodeBudget = 100'000'000;

// Thrown by RefineAutomorphisms when the node budget runs out. `partial`
// holds the generators found so far; its order is a lower bound.
class SearchBudgetExceeded : public ResourceError {
 public:
  SearchBudgetExceeded(const std::string& what, AutSearchResult partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const AutSearchResult& partial() const { return partial_; }

 private:
  AutSearchResult partial_;
};

// Tries all (2^k)! permutations. Throws ResourceError for k > 3.
AutSearchResult BruteForceGlp(int k, int t);

// Partition-refinement search; practical for k <= 6.
AutSearchResult RefineAutomorphisms(int k, int t,
                                    uint64_t node_budget = kDefaultNodeBudget);

// G^LP by whichever method applies: brute force is only used on request.
AutSearchResult ComputeGlp(int k, int t, SearchMethod method,
                           uint64_t node_budget = kDefaultNodeBudget);

// Expansion of a +-1 vector in the basis of all 2^k interaction columns.
struct BasisExpansion {
  std::vector<std::pair<SubsetLabel, Rational>> terms;  // nonzero only
};

BasisExpansion ExpandInInteractionBasis(int k, std::span<const int64_t> v);

enum class ImageForm {
  kSignedBasisVector,  // +-x_l for a single label
  kHalfFour,           // four +-1/2 terms over {x_ab, x_ac, x_b, x_c}
  kOther,
};

ImageForm ClassifyExpansion(const BasisExpansion& e);

// True iff the four labels are {x_ab, x_ac, x_b, x_c} for distinct a, b, c.
bool IsHalfFourFamily(std::span<const SubsetLabel> labels);

struct FormExample {
  std::string element;  // cycle notation
  SubsetLabel source = 0;
  BasisExpansion image;
};

struct ImageFormReport {
  int k = 0;
  int t = 0;
  BigInt group_order;
  // All group elements were scanned when the order is small; otherwise only
  // the generators.
  bool scanned_all_elements = false;
  size_t elements_scanned = 0;
  size_t images_checked = 0;
  size_t signed_images = 0;
  size_t half_four_images = 0;
  size_t other_images = 0;
  bool coefficients_in_half_set = true;   // every coefficient in {0,+-1/2,+-1}
  bool main_effects_to_main_effects = true;
  std::optional<FormExample> half_four_example;  // main-effect source only
};

inline constexpr uint64_t kFormScanElementCap = 100'000;

// Expands the image of every basis vector of Row(M) under G^LP. k <= 4.
ImageFormReport VerifyImageForms(int k, int t);
ImageFormReport VerifyImageForms(const AutSearchResult& glp);

}  // namespace oasym

#endif  // OASYM_GLP_SEARCH_H_
