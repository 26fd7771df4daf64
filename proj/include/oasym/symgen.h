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

// Explicit point permutations realizing the known symmetries of the OA model.
//
// Each map is described by its pullback on columns: a point permutation g
// sends a column vector x to x o g^-1. Because levels multiply like bits
// XOR (+1 <-> 0, -1 <-> 1), column maps built from sign changes, factor
// relabelings and Hadamard products are affine maps of the point bits:
//
//   SignFlipPerm(i):      toggles bit i-1            (x_i -> -x_i)
//   FactorSwapPerm(i, j): exchanges bits i-1, j-1    (x_i <-> x_j)
//   RhoPerm(i):           XORs bit i-1 into every other bit
//                         (x_j -> x_i x_j for j != i, x_i fixed)
//
// Signed factor permutations form the wreath product S_2 wr S_k, of order
// 2^k k!. Adding one rho map gives S_2^k x| S_{k+1}, of order 2^k (k+1)!,
// which is the full LP symmetry group of the strength-2 model for k >= 4.

#ifndef OASYM_SYMGEN_H_
#define OASYM_SYMGEN_H_

#include <string>
#include <vector>

#include "oasym/perm_group.h"
#include "oasym/permutation.h"

namespace oasym {

enum class GeneratorKind { kWreath, kStrength2 };

std::string GeneratorKindName(GeneratorKind kind);
// Throws DomainError for names other than "wreath" and "strength2".
GeneratorKind ParseGeneratorKind(const std::string& name);

struct GeneratorSet {
  int k = 0;
  int t = 0;  // strength the set is meant for (1 for wreath, 2 for strength2)
  GeneratorKind kind = GeneratorKind::kWreath;
  std::vector<Permutation> perms;
  BigInt claimed_order;
};

// Factor indices are 1-based; out-of-range arguments throw DomainError.
Permutation SignFlipPerm(int i, int k);
Permutation FactorSwapPerm(int i, int j, int k);
Permutation RhoPerm(int i, int k);

// SignFlipPerm(1) and the adjacent swaps (i, i+1).
GeneratorSet WreathGenerators(int k);
// WreathGenerators(k) plus RhoPerm(1, k); requires k >= 2.
GeneratorSet Strength2Generators(int k);
GeneratorSet MakeGenerators(GeneratorKind kind, int k);

}  // namespace oasym

#endif  // OASYM_SYMGEN_H_
