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

#ifndef OASYM_PERMUTATION_H_
#define OASYM_PERMUTATION_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace oasym {

// A bijection on {0, ..., degree-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError if `image` is not a bijection.
  explicit Permutation(std::vector<uint32_t> image);

  static Permutation Identity(size_t degree);
  // Cycles are lists of points; points not mentioned are fixed.
  static Permutation FromCycles(size_t degree,
                                std::span<const std::vector<uint32_t>> cycles);
  // Skips the bijection check; for internal hot paths.
  static Permutation FromImageUnchecked(std::vector<uint32_t> image);

  size_t degree() const { return image_.size(); }
  uint32_t operator()(uint32_t i) const { return image_[i]; }
  const std::vector<uint32_t>& image() const { return image_; }

  bool IsIdentity() const;
  Permutation Inverse() const;
  // degree() when the permutation is the identity.
  uint32_t SmallestMovedPoint() const;
  // Disjoint cycle notation, "()" for the identity.
  std::string ToCycleString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<uint32_t> image_;
};

// (a * b)(i) = a(b(i)). Throws DomainError on degree mismatch.
Permutation Compose(const Permutation& a, const Permutation& b);

// Coordinate action on vectors: out[p(i)] = v[i], i.e. out = v o p^-1.
template <typename T>
std::vector<T> PermuteVector(const Permutation& p, std::span<const T> v) {
  std::vector<T> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[p(static_cast<uint32_t>(i))] = v[i];
  return out;
}

}  // namespace oasym

#endif  // OASYM_PERMUTATION_H_
