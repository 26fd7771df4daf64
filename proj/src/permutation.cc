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

#include "oasym/permutation.h"

#include <numeric>
#include <utility>

#include "oasym/errors.h"

namespace oasym {

Permutation::Permutation(std::vector<uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (uint32_t v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw DomainError("image array is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(size_t degree) {
  std::vector<uint32_t> image(degree);
  std::iota(image.begin(), image.end(), 0u);
  return FromImageUnchecked(std::move(image));
}

Permutation Permutation::FromCycles(
    size_t degree, std::span<const std::vector<uint32_t>> cycles) {
  std::vector<uint32_t> image(degree);
  std::iota(image.begin(), image.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      const uint32_t from = cycle[i];
      const uint32_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree || used[from]) {
        throw DomainError("cycles must be disjoint and within the degree");
      }
      used[from] = true;
      image[from] = to;
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::FromImageUnchecked(std::vector<uint32_t> image) {
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::IsIdentity() const {
  for (uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<uint32_t> inv(image_.size());
  for (uint32_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return FromImageUnchecked(std::move(inv));
}

uint32_t Permutation::SmallestMovedPoint() const {
  for (uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return i;
  }
  return static_cast<uint32_t>(image_.size());
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<bool> done(image_.size(), false);
  for (uint32_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == start) continue;
    out += '(';
    uint32_t x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x);
      done[x] = true;
      x = image_[x];
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("cannot compose permutations of different degrees");
  }
  std::vector<uint32_t> image(a.degree());
  for (uint32_t i = 0; i < image.size(); ++i) image[i] = a(b(i));
  return Permutation::FromImageUnchecked(std::move(image));
}

}  // namespace oasym
