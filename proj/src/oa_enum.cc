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

#include "oasym/oa_enum.h"

#include <cstdlib>
#include <set>
#include <string>
#include <unordered_set>

#include "oasym/errors.h"
#include "oasym/ilp_model.h"

namespace oasym {
namespace {

using Counts = std::vector<int32_t>;

struct CountsHash {
  size_t operator()(const Counts& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : v) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

Counts Permute(const Permutation& p, const Counts& v) {
  Counts out(v.size());
  for (uint32_t i = 0; i < v.size(); ++i) out[p(i)] = v[i];
  return out;
}

// Breadth-first orbit of `v`. Returns 0 as soon as a member smaller than v
// appears, otherwise the orbit size.
uint64_t OrbitSizeIfLeast(const Counts& v, std::span<const Permutation> gens) {
  std::unordered_set<Counts, CountsHash> seen{v};
  std::vector<Counts> frontier{v};
  while (!frontier.empty()) {
    std::vector<Counts> next;
    for (const Counts& cur : frontier) {
      for (const Permutation& g : gens) {
        Counts image = Permute(g, cur);
        if (image < v) return 0;
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Counts LeastInOrbit(const Counts& v, std::span<const Permutation> gens) {
  std::set<Counts> seen{v};
  std::vector<Counts> frontier{v};
  while (!frontier.empty()) {
    std::vector<Counts> next;
    for (const Counts& cur : frontier) {
      for (const Permutation& g : gens) {
        Counts image = Permute(g, cur);
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return *seen.begin();
}

class Enumerator {
 public:
  Enumerator(int64_t n, int k, int t, std::span<const Permutation> group,
             uint64_t budget)
      : n_(n), k_(k), group_(group), budget_(budget), labels_(ModelLabels(k, t)) {
    const uint32_t points = NumPoints(k);
    // suffix_has_[r][p]: bit 0 set if some q >= p has sign +1 in row r,
    // bit 1 set if some q >= p has sign -1.
    suffix_has_.assign(labels_.size(), std::vector<uint8_t>(points + 1, 0));
    for (size_t r = 0; r < labels_.size(); ++r) {
      for (int64_t p = points - 1; p >= 0; --p) {
        const int s = InteractionSign(labels_[r], static_cast<PointIndex>(p));
        suffix_has_[r][p] = suffix_has_[r][p + 1] | (s > 0 ? 1 : 2);
      }
    }
    partial_.assign(labels_.size(), 0);
    counts_.assign(points, 0);
    result_.n = n;
    result_.k = k;
    result_.t = t;
    result_.group_order_used = GroupOrder(group);
  }

  EnumResult Run() && {
    Descend(0, n_);
    return std::move(result_);
  }

 private:
  // Can rows still be met when `remaining` units go to points >= p?
  bool Reachable(uint32_t p, int64_t remaining) const {
    for (size_t r = 1; r < labels_.size(); ++r) {
      const int64_t residual = -partial_[r];
      if (std::llabs(residual) > remaining || ((residual + remaining) & 1)) {
        return false;
      }
      const uint8_t has = suffix_has_[r][p];
      if (remaining > 0) {
        if (has == 1 && residual != remaining) return false;
        if (has == 2 && residual != -remaining) return false;
      }
    }
    return true;
  }

  void Descend(uint32_t p, int64_t remaining) {
    if (++result_.nodes > budget_) {
      throw ResourceError("enumeration exceeded its node budget of " +
                          std::to_string(budget_));
    }
    const uint32_t points = static_cast<uint32_t>(counts_.size());
    if (p == points) {
      if (remaining == 0) Record();
      return;
    }
    const int64_t lo = (p + 1 == points) ? remaining : 0;
    for (int64_t v = lo; v <= remaining; ++v) {
      counts_[p] = static_cast<int32_t>(v);
      for (size_t r = 1; r < labels_.size(); ++r) {
        partial_[r] += v * InteractionSign(labels_[r], p);
      }
      if (Reachable(p + 1, remaining - v)) Descend(p + 1, remaining - v);
      for (size_t r = 1; r < labels_.size(); ++r) {
        partial_[r] -= v * InteractionSign(labels_[r], p);
      }
    }
    counts_[p] = 0;
  }

  void Record() {
    ++result_.leaves;
    uint64_t orbit = 1;
    if (!group_.empty()) {
      orbit = OrbitSizeIfLeast(counts_, group_);
      if (orbit == 0) return;
    }
    std::vector<int64_t> wide(counts_.begin(), counts_.end());
    result_.representatives.push_back(FrequencyVector::FromIntegers(k_, wide));
    result_.orbit_sizes.push_back(orbit);
    result_.total_solutions += orbit;
  }

  int64_t n_;
  int k_;
  std::span<const Permutation> group_;
  uint64_t budget_;
  std::vector<SubsetLabel> labels_;
  std::vector<std::vector<uint8_t>> suffix_has_;
  std::vector<int64_t> partial_;
  Counts counts_;
  EnumResult result_;
};

}  // namespace

EnumResult EnumerateOa(int64_t n, int k, int t,
                       std::span<const Permutation> group,
                       uint64_t node_budget) {
  CheckModelShape(k, t);
  if (k > kEnumMaxFactors) {
    throw DomainError("enumeration is limited to k <= 5");
  }
  if (n < 1 || n > kEnumMaxRuns) {
    throw DomainError("enumeration needs 1 <= N <= 32");
  }
  for (const Permutation& g : group) {
    if (g.degree() != NumPoints(k)) {
      throw DomainError("group degree does not match 2^k");
    }
  }
  if (n % (int64_t{1} << t) != 0) {
    EnumResult empty;
    empty.n = n;
    empty.k = k;
    empty.t = t;
    empty.group_order_used = GroupOrder(group);
    return empty;
  }
  return Enumerator(n, k, t, group, node_budget).Run();
}

bool VerifyGroupAction(const EnumResult& result,
                       std::span<const Permutation> group) {
  std::set<Counts> reps;
  for (const FrequencyVector& f : result.representatives) {
    const std::vector<int64_t> c = f.IntegerCounts();
    reps.insert(Counts(c.begin(), c.end()));
  }
  for (const FrequencyVector& f : result.representatives) {
    for (const Permutation& g : group) {
      const FrequencyVector image(f.k(), PermuteVector<Rational>(g, f.counts()));
      if (!IsFeasible(image, result.n, result.k, result.t,
                      /*require_integral=*/true)) {
        return false;
      }
      const std::vector<int64_t> c = image.IntegerCounts();
      if (!reps.contains(LeastInOrbit(Counts(c.begin(), c.end()), group))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace oasym
