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

// Automorphisms of a complete edge-colored graph (a symmetric matrix of
// small integer colors) by individualization and partition refinement.
//
// The search fixes a "left" path: starting from the coarsest equitable
// partition, it repeatedly individualizes the smallest point of the first
// smallest non-singleton cell and refines, until the partition is discrete.
// The individualized points form a base b_0, ..., b_{m-1}. Then, from the
// deepest level up, for every point w in the target cell of level i that is
// not yet in the orbit of b_i under the automorphisms found so far, it
// searches exhaustively for an automorphism fixing b_0..b_{i-1} and mapping
// b_i to w. The automorphisms found form a strong generating set relative to
// that base.
//
// Refinement splits every cell by the per-cell color histogram of each
// point. Subcells are ordered by histogram, which makes the procedure
// invariant under relabeling, so the left and right paths stay comparable.

#ifndef OASYM_AUTOMORPHISM_SEARCH_H_
#define OASYM_AUTOMORPHISM_SEARCH_H_

#include <cstdint>
#include <vector>

#include "oasym/errors.h"
#include "oasym/permutation.h"

namespace oasym {

class ColoredGraph {
 public:
  // `colors` is row-major n x n, symmetric; values are arbitrary integers.
  ColoredGraph(size_t n, std::vector<int64_t> colors);

  size_t size() const { return n_; }
  int num_colors() const { return num_colors_; }
  // Dense color id in [0, num_colors()).
  int color(uint32_t i, uint32_t j) const { return ids_[i * n_ + j]; }
  bool IsAutomorphism(const Permutation& p) const;

 private:
  size_t n_;
  int num_colors_ = 0;
  std::vector<int> ids_;
};

struct AutomorphismSearchStats {
  uint64_t nodes = 0;
  std::vector<uint32_t> base;
};

struct AutomorphismSearchOutcome {
  std::vector<Permutation> generators;
  AutomorphismSearchStats stats;
  bool budget_exhausted = false;
};

// Returns generators of Aut(graph). When more than `node_budget` search
// nodes would be visited, stops and returns what was found so far with
// budget_exhausted set; those generators still generate a subgroup.
AutomorphismSearchOutcome FindAutomorphisms(const ColoredGraph& graph,
                                            uint64_t node_budget);

}  // namespace oasym

#endif  // OASYM_AUTOMORPHISM_SEARCH_H_
