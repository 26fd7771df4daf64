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

// Finitely generated permutation groups backed by a stabilizer chain.
//
// The chain is built with the deterministic Schreier-Sims algorithm. Each new
// base point is the smallest point moved by the generator that forced the new
// level, so the same generator list always produces the same base. Coset
// representatives are stored implicitly as Schreier trees (one generator
// index per orbit point), which keeps memory linear in the degree per level.

#ifndef OASYM_PERM_GROUP_H_
#define OASYM_PERM_GROUP_H_

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oasym/errors.h"
#include "oasym/factorial.h"
#include "oasym/permutation.h"

namespace oasym {

using BigInt = boost::multiprecision::cpp_int;

class PermGroup {
 public:
  // All generators must have the given degree. Identity generators are
  // accepted and ignored.
  PermGroup(size_t degree, std::vector<Permutation> generators);

  size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  const std::vector<uint32_t>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const {
    return strong_gens_;
  }
  // Basic orbit sizes along the chain; their product is order().
  std::vector<size_t> TransversalSizes() const;

  // Throws DomainError on degree mismatch.
  bool Contains(const Permutation& p) const;

  // Orbit of a point under the group, ascending.
  std::vector<uint32_t> Orbit(uint32_t point) const;

  // Visits every element exactly once; stops early when `visit` returns
  // false. Only sensible for small groups.
  void ForEachElement(const std::function<bool(const Permutation&)>& visit) const;

 private:
  struct Level {
    uint32_t base_point = 0;
    // Per point: -1 if outside the basic orbit, -2 for the base point,
    // otherwise the index s of the strong generator with point = s(parent).
    std::vector<int32_t> tree;
    std::vector<uint32_t> orbit;
  };

  void AddStrongGenerator(Permutation g, size_t level);
  void RebuildOrbit(size_t level);
  // Coset representative of `point` at `level`, mapping the base point to it.
  Permutation Representative(size_t level, uint32_t point) const;
  // Strips g through levels [from, depth). Returns the residue and sets
  // *stop to the level where sifting stopped (depth if it passed through).
  Permutation Sift(Permutation g, size_t from, size_t* stop) const;
  void BuildChain();

  size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_gens_;
  std::vector<Permutation> strong_gens_inv_;
  std::vector<size_t> strong_gen_level_;
  std::vector<Level> levels_;
  std::vector<uint32_t> base_;
  BigInt order_ = 1;
};

// Order of <gens>; an empty list generates the trivial group.
BigInt GroupOrder(std::span<const Permutation> gens);

inline constexpr size_t kDefaultOrbitCap = 10'000'000;

template <typename T>
struct VectorOrbit {
  std::vector<std::vector<T>> members;  // ascending lexicographic order
  std::vector<T> representative;        // members.front()
};

// Orbit of v under the coordinate action v -> v o p^-1 of <gens>, by
// breadth-first expansion. Throws ResourceError once more than `cap`
// distinct vectors have been seen.
template <typename T>
VectorOrbit<T> OrbitOfVector(std::span<const T> v,
                             std::span<const Permutation> gens,
                             size_t cap = kDefaultOrbitCap) {
  for (const Permutation& g : gens) {
    if (g.degree() != v.size()) {
      throw DomainError("generator degree does not match vector length");
    }
  }
  std::set<std::vector<T>> seen;
  std::vector<std::vector<T>> frontier;
  frontier.emplace_back(v.begin(), v.end());
  seen.insert(frontier.back());
  while (!frontier.empty()) {
    std::vector<std::vector<T>> next;
    for (const auto& current : frontier) {
      for (const Permutation& g : gens) {
        std::vector<T> image = PermuteVector<T>(g, current);
        if (seen.insert(image).second) {
          if (seen.size() > cap) {
            throw ResourceError("vector orbit exceeds cap of " +
                                std::to_string(cap));
          }
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
  VectorOrbit<T> orbit;
  orbit.members.assign(seen.begin(), seen.end());
  orbit.representative = orbit.members.front();
  return orbit;
}

struct FrequencyOrbit {
  std::vector<FrequencyVector> members;
  FrequencyVector representative;
};

FrequencyOrbit OrbitOfFrequencyVector(const FrequencyVector& f,
                                      std::span<const Permutation> gens,
                                      size_t cap = kDefaultOrbitCap);

}  // namespace oasym

#endif  // OASYM_PERM_GROUP_H_
