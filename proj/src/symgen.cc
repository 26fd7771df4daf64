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

#include "oasym/symgen.h"

#include <utility>

#include "oasym/errors.h"
#include "oasym/factorial.h"

namespace oasym {
namespace {

void CheckFactor(int i, int k) {
  CheckFactorCount(k);
  if (i < 1 || i > k) {
    throw DomainError("factor index " + std::to_string(i) +
                      " outside [1, " + std::to_string(k) + "]");
  }
}

template <typename PointMap>
Permutation FromPointMap(int k, PointMap map) {
  std::vector<uint32_t> image(NumPoints(k));
  for (PointIndex p = 0; p < image.size(); ++p) image[p] = map(p);
  return Permutation::FromImageUnchecked(std::move(image));
}

BigInt Factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

std::string GeneratorKindName(GeneratorKind kind) {
  return kind == GeneratorKind::kWreath ? "wreath" : "strength2";
}

GeneratorKind ParseGeneratorKind(const std::string& name) {
  if (name == "wreath") return GeneratorKind::kWreath;
  if (name == "strength2") return GeneratorKind::kStrength2;
  throw DomainError("unknown generator kind: " + name);
}

Permutation SignFlipPerm(int i, int k) {
  CheckFactor(i, k);
  const uint32_t bit = uint32_t{1} << (i - 1);
  return FromPointMap(k, [bit](PointIndex p) { return p ^ bit; });
}

Permutation FactorSwapPerm(int i, int j, int k) {
  CheckFactor(i, k);
  CheckFactor(j, k);
  if (i >= j) throw DomainError("factor swap needs i < j");
  const int a = i - 1;
  const int b = j - 1;
  return FromPointMap(k, [a, b](PointIndex p) {
    const uint32_t differ = ((p >> a) ^ (p >> b)) & 1u;
    return p ^ (differ << a) ^ (differ << b);
  });
}

Permutation RhoPerm(int i, int k) {
  CheckFactor(i, k);
  const int a = i - 1;
  const uint32_t others = (NumPoints(k) - 1) & ~(uint32_t{1} << a);
  return FromPointMap(k, [a, others](PointIndex p) {
    return ((p >> a) & 1u) ? p ^ others : p;
  });
}

GeneratorSet WreathGenerators(int k) {
  CheckFactorCount(k);
  GeneratorSet set;
  set.k = k;
  set.t = 1;
  set.kind = GeneratorKind::kWreath;
  set.perms.push_back(SignFlipPerm(1, k));
  for (int i = 1; i < k; ++i) set.perms.push_back(FactorSwapPerm(i, i + 1, k));
  set.claimed_order = (BigInt{1} << k) * Factorial(k);
  return set;
}

GeneratorSet Strength2Generators(int k) {
  CheckFactorCount(k);
  if (k < 2) throw DomainError("strength-2 generators need k >= 2");
  GeneratorSet set = WreathGenerators(k);
  set.t = 2;
  set.kind = GeneratorKind::kStrength2;
  set.perms.push_back(RhoPerm(1, k));
  set.claimed_order = (BigInt{1} << k) * Factorial(k + 1);
  return set;
}

GeneratorSet MakeGenerators(GeneratorKind kind, int k) {
  return kind == GeneratorKind::kWreath ? WreathGenerators(k)
                                        : Strength2Generators(k);
}

}  // namespace oasym
