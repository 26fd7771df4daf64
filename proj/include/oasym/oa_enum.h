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

// Exhaustive enumeration of OA(N, k, 2, t) frequency vectors.
//
// Entries of f are assigned in ascending point order. For every equality row
// the running dot product is checked against the remaining run capacity: each
// unassigned unit contributes exactly +-1 to every row, so a row is still
// satisfiable only if its residual has the parity of the capacity and lies
// within the range spanned by the signs left in the suffix. Solutions come
// out in ascending lexicographic order.
//
// With a symmetry group, a solution is kept only if it is the
// lexicographically least member of its orbit; orbit sizes are recorded so
// the unpruned count can be reconstructed.

#ifndef OASYM_OA_ENUM_H_
#define OASYM_OA_ENUM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "oasym/factorial.h"
#include "oasym/perm_group.h"
#include "oasym/permutation.h"

namespace oasym {

inline constexpr int kEnumMaxFactors = 5;
inline constexpr int64_t kEnumMaxRuns = 32;
inline constexpr uint64_t kDefaultEnumBudget = 1'000'000'000;

struct EnumResult {
  int64_t n = 0;
  int k = 0;
  int t = 0;
  // With a group this is the sum of orbit sizes of the representatives.
  uint64_t total_solutions = 0;
  std::vector<FrequencyVector> representatives;
  std::vector<uint64_t> orbit_sizes;  // parallel to representatives
  BigInt group_order_used = 1;
  uint64_t nodes = 0;
  uint64_t leaves = 0;  // feasible vectors visited by the search
};

// `group` may be empty (no isomorph rejection). Infeasible parameters, such
// as N not divisible by 2^t, give an empty result. Throws DomainError when
// k > 5, N > 32 or the shape is invalid, and ResourceError when the search
// visits more than `node_budget` nodes.
EnumResult EnumerateOa(int64_t n, int k, int t,
                       std::span<const Permutation> group,
                       uint64_t node_budget = kDefaultEnumBudget);

// True iff for every representative f and every generator p, p.f is an
// integral feasible point whose orbit is represented in `result`.
bool VerifyGroupAction(const EnumResult& result,
                       std::span<const Permutation> group);

}  // namespace oasym

#endif  // OASYM_OA_ENUM_H_
