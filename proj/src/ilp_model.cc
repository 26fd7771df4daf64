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

#include "oasym/ilp_model.h"

#include <bit>
#include <functional>
#include <string>

#include "oasym/errors.h"

namespace oasym {

void CheckModelShape(int k, int t) {
  CheckFactorCount(k);
  if (t < 1 || t > k) {
    throw DomainError("strength must satisfy 1 <= t <= k, got t=" +
                      std::to_string(t) + ", k=" + std::to_string(k));
  }
}

std::vector<SubsetLabel> ModelLabels(int k, int t) {
  CheckModelShape(k, t);
  std::vector<SubsetLabel> labels{0};
  // Combinations of each size in lexicographic order of factor lists.
  std::vector<int> combo;
  std::function<void(int, int)> extend = [&](int next, int remaining) {
    if (remaining == 0) {
      labels.push_back(LabelFromFactors(combo));
      return;
    }
    for (int f = next; f <= k - remaining + 1; ++f) {
      combo.push_back(f);
      extend(f + 1, remaining - 1);
      combo.pop_back();
    }
  };
  for (int size = 1; size <= t; ++size) extend(1, size);
  return labels;
}

size_t ModelRowCount(int k, int t) {
  CheckModelShape(k, t);
  size_t total = 0;
  size_t binom = 1;
  for (int i = 0; i <= t; ++i) {
    total += binom;
    binom = binom * (k - i) / (i + 1);
  }
  return total;
}

ModelMatrix BuildM(int k, int t) {
  ModelMatrix m;
  m.k = k;
  m.t = t;
  m.labels = ModelLabels(k, t);
  const uint32_t n = NumPoints(k);
  m.rows.reserve(m.labels.size());
  for (SubsetLabel l : m.labels) {
    std::vector<int8_t> row(n);
    for (PointIndex p = 0; p < n; ++p) row[p] = static_cast<int8_t>(InteractionSign(l, p));
    m.rows.push_back(std::move(row));
  }
  return m;
}

RhsVector BuildJ(int64_t n, int k, int t) {
  if (n < 1) throw DomainError("run count N must be positive");
  RhsVector j;
  j.n = n;
  j.values.assign(ModelRowCount(k, t), 0);
  j.values[0] = n;
  return j;
}

bool IsFeasible(const FrequencyVector& f, int64_t n, int k, int t,
                bool require_integral) {
  CheckModelShape(k, t);
  if (f.k() != k || f.size() != NumPoints(k)) {
    throw DomainError("frequency vector length does not match 2^k");
  }
  if (!f.IsNonNegative()) return false;
  if (require_integral && !f.IsIntegral()) return false;
  for (SubsetLabel l : ModelLabels(k, t)) {
    Rational sum = 0;
    for (PointIndex p = 0; p < f.size(); ++p) {
      if (InteractionSign(l, p) > 0) {
        sum += f[p];
      } else {
        sum -= f[p];
      }
    }
    if (sum != (l == 0 ? Rational(n) : Rational(0))) return false;
  }
  return true;
}

GramProjection::GramProjection(int k, int t) : k_(k), t_(t), weights_(k + 1, 0) {
  CheckModelShape(k, t);
  // For points at Hamming distance d, sum over |l| <= t of (-1)^|l & diff|
  // depends only on d; evaluate it on the representative diff = 2^d - 1.
  const std::vector<SubsetLabel> labels = ModelLabels(k, t);
  for (int d = 0; d <= k; ++d) {
    const uint32_t diff = (uint32_t{1} << d) - 1;
    int64_t w = 0;
    for (SubsetLabel l : labels) w += InteractionSign(l, diff);
    weights_[d] = w;
  }
}

int64_t GramProjection::at(uint32_t i, uint32_t j) const {
  return weights_[std::popcount(i ^ j)];
}

std::vector<int64_t> GramProjection::Dense() const {
  const size_t n = dim();
  std::vector<int64_t> q(n * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) q[i * n + j] = at(i, j);
  }
  return q;
}

std::vector<int64_t> GramProjection::Apply(std::span<const int64_t> v) const {
  if (v.size() != dim()) throw DomainError("vector length does not match 2^k");
  std::vector<int64_t> w(v.begin(), v.end());
  WalshHadamardInPlace(w);  // w[l] = <col_l, v>
  for (SubsetLabel l = 0; l < w.size(); ++l) {
    if (LabelSize(l) > t_) w[l] = 0;
  }
  WalshHadamardInPlace(w);  // sum over kept l of w[l] col_l
  return w;
}

GramProjection BuildGramProjection(int k, int t) { return GramProjection(k, t); }

bool RowspaceMember(std::span<const int64_t> v, int k, int t) {
  const GramProjection q(k, t);
  const std::vector<int64_t> qv = q.Apply(v);
  const int64_t scale = int64_t{1} << k;
  for (size_t i = 0; i < v.size(); ++i) {
    if (qv[i] != scale * v[i]) return false;
  }
  return true;
}

bool PermPreservesRowspace(const Permutation& p, const GramProjection& q) {
  if (p.degree() != q.dim()) {
    throw DomainError("permutation degree does not match 2^k");
  }
  const uint32_t n = static_cast<uint32_t>(q.dim());
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t pi = p(i);
    for (uint32_t j = i + 1; j < n; ++j) {
      if (q.at(pi, p(j)) != q.at(i, j)) return false;
    }
  }
  return true;
}

bool PermPreservesRowspace(const Permutation& p, int k, int t) {
  return PermPreservesRowspace(p, GramProjection(k, t));
}

}  // namespace oasym
