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

#include "oasym/perm_group.h"

#include <algorithm>
#include <utility>

namespace oasym {

PermGroup::PermGroup(size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) {
      throw DomainError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " +
                        std::to_string(degree_));
    }
  }
  BuildChain();
}

std::vector<size_t> PermGroup::TransversalSizes() const {
  std::vector<size_t> sizes;
  for (const Level& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

void PermGroup::RebuildOrbit(size_t level_index) {
  Level& level = levels_[level_index];
  level.tree.assign(degree_, -1);
  level.orbit.clear();
  level.tree[level.base_point] = -2;
  level.orbit.push_back(level.base_point);
  // Generators of the i-th stabilizer are the strong generators stored at
  // level i or deeper.
  for (size_t pos = 0; pos < level.orbit.size(); ++pos) {
    const uint32_t x = level.orbit[pos];
    for (size_t s = 0; s < strong_gens_.size(); ++s) {
      if (strong_gen_level_[s] < level_index) continue;
      const uint32_t y = strong_gens_[s](x);
      if (level.tree[y] == -1) {
        level.tree[y] = static_cast<int32_t>(s);
        level.orbit.push_back(y);
      }
    }
  }
}

Permutation PermGroup::Representative(size_t level_index, uint32_t point) const {
  const Level& level = levels_[level_index];
  // Collect the generator path from the root, then compose outward.
  std::vector<int32_t> path;
  uint32_t x = point;
  while (level.tree[x] != -2) {
    const int32_t s = level.tree[x];
    path.push_back(s);
    x = strong_gens_inv_[s](x);
  }
  std::vector<uint32_t> image(degree_);
  for (uint32_t i = 0; i < degree_; ++i) {
    uint32_t y = i;
    for (auto it = path.rbegin(); it != path.rend(); ++it) y = strong_gens_[*it](y);
    image[i] = y;
  }
  return Permutation::FromImageUnchecked(std::move(image));
}

Permutation PermGroup::Sift(Permutation g, size_t from, size_t* stop) const {
  std::vector<uint32_t> h = g.image();
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    uint32_t x = h[level.base_point];
    if (level.tree[x] == -1) {
      *stop = i;
      return Permutation::FromImageUnchecked(std::move(h));
    }
    // h <- u_x^-1 h, walking the Schreier tree back to the root.
    while (level.tree[x] != -2) {
      const Permutation& inv = strong_gens_inv_[level.tree[x]];
      for (uint32_t& v : h) v = inv(v);
      x = inv(x);
    }
  }
  *stop = levels_.size();
  return Permutation::FromImageUnchecked(std::move(h));
}

void PermGroup::AddStrongGenerator(Permutation g, size_t level) {
  if (level == levels_.size()) {
    Level fresh;
    fresh.base_point = g.SmallestMovedPoint();
    levels_.push_back(std::move(fresh));
    base_.push_back(levels_.back().base_point);
  }
  strong_gens_inv_.push_back(g.Inverse());
  strong_gens_.push_back(std::move(g));
  strong_gen_level_.push_back(level);
  for (size_t i = 0; i <= level; ++i) RebuildOrbit(i);
}

void PermGroup::BuildChain() {
  for (const Permutation& g : generators_) {
    if (g.IsIdentity()) continue;
    size_t stop = 0;
    Permutation residue = Sift(g, 0, &stop);
    if (!residue.IsIdentity()) AddStrongGenerator(std::move(residue), stop);
  }

  // Sims' verification: every Schreier generator of level i must sift
  // through the chain below i. A failure adds a strong generator at some
  // deeper level j and resumes checking from j.
  ptrdiff_t i = static_cast<ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool added = false;
    const size_t li = static_cast<size_t>(i);
    for (size_t pos = 0; pos < levels_[li].orbit.size() && !added; ++pos) {
      const uint32_t x = levels_[li].orbit[pos];
      const Permutation ux = Representative(li, x);
      for (size_t s = 0; s < strong_gens_.size(); ++s) {
        if (strong_gen_level_[s] < li) continue;
        const uint32_t y = strong_gens_[s](x);
        // Tree edges give trivial Schreier generators.
        if (levels_[li].tree[y] == static_cast<int32_t>(s) &&
            strong_gens_inv_[s](y) == x) {
          continue;
        }
        size_t stop = 0;
        Permutation residue = Sift(Compose(strong_gens_[s], ux), li, &stop);
        if (!residue.IsIdentity()) {
          AddStrongGenerator(std::move(residue), stop);
          i = static_cast<ptrdiff_t>(stop);
          added = true;
          break;
        }
      }
    }
    if (!added) --i;
  }

  order_ = 1;
  for (const Level& level : levels_) order_ *= level.orbit.size();
}

bool PermGroup::Contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw DomainError("permutation degree does not match group degree");
  }
  size_t stop = 0;
  const Permutation residue = Sift(p, 0, &stop);
  return stop == levels_.size() && residue.IsIdentity();
}

std::vector<uint32_t> PermGroup::Orbit(uint32_t point) const {
  if (point >= degree_) throw DomainError("point outside the group degree");
  std::vector<bool> seen(degree_, false);
  std::vector<uint32_t> orbit{point};
  seen[point] = true;
  for (size_t pos = 0; pos < orbit.size(); ++pos) {
    for (const Permutation& g : generators_) {
      const uint32_t y = g(orbit[pos]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

void PermGroup::ForEachElement(
    const std::function<bool(const Permutation&)>& visit) const {
  // Every element factors uniquely as u_0 u_1 ... u_{m-1} with u_i a coset
  // representative of level i.
  std::vector<std::vector<Permutation>> transversals(levels_.size());
  for (size_t i = 0; i < levels_.size(); ++i) {
    for (uint32_t x : levels_[i].orbit) transversals[i].push_back(Representative(i, x));
  }
  bool keep_going = true;
  std::function<void(size_t, const Permutation&)> walk =
      [&](size_t level, const Permutation& prefix) {
        if (!keep_going) return;
        if (level == transversals.size()) {
          keep_going = visit(prefix);
          return;
        }
        for (const Permutation& u : transversals[level]) {
          walk(level + 1, Compose(prefix, u));
          if (!keep_going) return;
        }
      };
  walk(0, Permutation::Identity(degree_));
}

BigInt GroupOrder(std::span<const Permutation> gens) {
  if (gens.empty()) return 1;
  return PermGroup(gens.front().degree(),
                   std::vector<Permutation>(gens.begin(), gens.end()))
      .order();
}

FrequencyOrbit OrbitOfFrequencyVector(const FrequencyVector& f,
                                      std::span<const Permutation> gens,
                                      size_t cap) {
  VectorOrbit<Rational> orbit =
      OrbitOfVector<Rational>(std::span<const Rational>(f.counts()), gens, cap);
  std::vector<FrequencyVector> members;
  members.reserve(orbit.members.size());
  for (auto& m : orbit.members) members.emplace_back(f.k(), std::move(m));
  FrequencyVector rep = members.front();
  return {std::move(members), std::move(rep)};
}

}  // namespace oasym
