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

// The orthogonal-array defining integer program
//
//   M f = J,  f >= 0,  f integral,
//
// where the rows of M are the interaction columns of all factor subsets of
// size at most t and J = (N, 0, ..., 0). The rows of M are pairwise orthogonal
// with squared norm 2^k, so Q = M^T M acts as 2^k times the orthogonal
// projection onto Row(M). A coordinate permutation preserves Row(M) exactly
// when it preserves Q entrywise, and those permutations are precisely the
// symmetries of the LP relaxation.

#ifndef OASYM_ILP_MODEL_H_
#define OASYM_ILP_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "oasym/factorial.h"
#include "oasym/permutation.h"

namespace oasym {

// Throws DomainError unless 1 <= t <= k <= kMaxFactors.
void CheckModelShape(int k, int t);

// Labels with |l| <= t: the empty label, then singletons, then pairs, ...;
// labels of one size in lexicographic order of their factor lists.
std::vector<SubsetLabel> ModelLabels(int k, int t);

// sum_{i=0}^{t} C(k, i).
size_t ModelRowCount(int k, int t);

struct ModelMatrix {
  int k = 0;
  int t = 0;
  std::vector<SubsetLabel> labels;
  std::vector<std::vector<int8_t>> rows;  // rows[r] = interaction column of labels[r]

  size_t num_rows() const { return rows.size(); }
  size_t num_cols() const { return size_t{1} << k; }
};

ModelMatrix BuildM(int k, int t);

struct RhsVector {
  int64_t n = 0;
  std::vector<int64_t> values;  // (N, 0, ..., 0)
};

RhsVector BuildJ(int64_t n, int k, int t);

// Exact check of M f = J and f >= 0. With require_integral, f must also be
// integral (the ILP test); otherwise this is the LP-relaxation test.
// Throws DomainError if f does not have 2^k entries.
bool IsFeasible(const FrequencyVector& f, int64_t n, int k, int t,
                bool require_integral = false);

// Q = M^T M. Entry (i, j) depends only on the Hamming distance of the two
// points, Q_ij = sum_{|l| <= t} (-1)^|l & (i xor j)|, so the projection is
// stored as its k+1 distance weights; Dense() materializes the matrix.
class GramProjection {
 public:
  GramProjection(int k, int t);

  int k() const { return k_; }
  int t() const { return t_; }
  size_t dim() const { return size_t{1} << k_; }
  int64_t DistanceWeight(int distance) const { return weights_[distance]; }
  int64_t at(uint32_t i, uint32_t j) const;
  // Row-major dim() x dim() matrix; only for small k.
  std::vector<int64_t> Dense() const;
  // Q v, computed as M^T (M v) through two Walsh transforms.
  std::vector<int64_t> Apply(std::span<const int64_t> v) const;

 private:
  int k_;
  int t_;
  std::vector<int64_t> weights_;
};

GramProjection BuildGramProjection(int k, int t);

// v is in Row(M) iff Q v = 2^k v. Throws DomainError on length mismatch.
bool RowspaceMember(std::span<const int64_t> v, int k, int t);

// True iff Q[p(i)][p(j)] = Q[i][j] for all i, j.
bool PermPreservesRowspace(const Permutation& p, int k, int t);
bool PermPreservesRowspace(const Permutation& p, const GramProjection& q);

}  // namespace oasym

#endif  // OASYM_ILP_MODEL_H_
