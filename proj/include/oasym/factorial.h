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

// Two-level full factorial designs, interaction columns and J-characteristics.
//
// Conventions used throughout the library:
//  * A point (factor level combination) is a PointIndex p in [0, 2^k). Bit i
//    of p is the level of factor i+1: bit 0 means level +1, bit 1 means -1.
//    Enumerating p = 0, 1, 2, ... therefore lists the full factorial with the
//    first factor varying fastest (the expand.grid(c(1,-1), ...) order).
//  * A factor subset is a SubsetLabel bitmask; bit i set means factor i+1 is
//    in the subset. The empty mask labels the all-ones column.
//  * The interaction column of label l has entry (-1)^popcount(p & l) at p,
//    so the J-characteristic vector of a frequency vector is its Walsh
//    (Hadamard) transform.
//
// All arithmetic is exact; nothing here touches floating point.

#ifndef OASYM_FACTORIAL_H_
#define OASYM_FACTORIAL_H_

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace oasym {

using Rational = boost::rational<int64_t>;
using PointIndex = uint32_t;
using SubsetLabel = uint32_t;

inline constexpr int kMaxFactors = 16;

// Throws DomainError unless 1 <= k <= kMaxFactors.
void CheckFactorCount(int k);

inline uint32_t NumPoints(int k) { return uint32_t{1} << k; }

// Level (+1 or -1) of 0-based factor `factor` at point p.
inline int Level(PointIndex p, int factor) {
  return ((p >> factor) & 1u) ? -1 : 1;
}

// Entry of the interaction column for `label` at point p.
inline int InteractionSign(SubsetLabel label, PointIndex p) {
  return (std::popcount(label & p) & 1) ? -1 : 1;
}

inline int LabelSize(SubsetLabel label) { return std::popcount(label); }

// 1-based factor list of a label, ascending.
std::vector<int> LabelFactors(SubsetLabel label);
SubsetLabel LabelFromFactors(std::span<const int> factors);

// "1" for the empty label, otherwise "x1", "x1,2", ...
std::string LabelName(SubsetLabel label);

// An N x k array over {+1, -1}; rows are runs.
class Design {
 public:
  // `entries` is row-major with num_factors columns.
  Design(int num_factors, std::vector<int8_t> entries);

  int num_runs() const { return num_runs_; }
  int num_factors() const { return num_factors_; }
  int at(int run, int factor) const {
    return entries_[static_cast<size_t>(run) * num_factors_ + factor];
  }
  std::span<const int8_t> run(int r) const {
    return {entries_.data() + static_cast<size_t>(r) * num_factors_,
            static_cast<size_t>(num_factors_)};
  }
  const std::vector<int8_t>& entries() const { return entries_; }

  // Point index of run r under the fixed encoding.
  PointIndex RunPoint(int r) const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  int num_runs_ = 0;
  int num_factors_ = 0;
  std::vector<int8_t> entries_;
};

// Counts of each of the 2^k level combinations. Counts are exact rationals so
// that LP-relaxation points can be represented; ILP points are integral.
//
// Length is always 2^k. Nonnegativity is a property checked by callers
// (FreqFromFullJ can legitimately produce negative entries).
class FrequencyVector {
 public:
  FrequencyVector(int k, std::vector<Rational> counts);
  static FrequencyVector FromIntegers(int k, std::span<const int64_t> counts);
  static FrequencyVector Uniform(int k, Rational value);

  int k() const { return k_; }
  size_t size() const { return counts_.size(); }
  const Rational& operator[](size_t p) const { return counts_[p]; }
  Rational& operator[](size_t p) { return counts_[p]; }
  const std::vector<Rational>& counts() const { return counts_; }

  bool IsNonNegative() const;
  bool IsIntegral() const;
  // Throws DomainError if some count is not an integer.
  std::vector<int64_t> IntegerCounts() const;
  Rational Total() const;

  friend bool operator==(const FrequencyVector&,
                         const FrequencyVector&) = default;

 private:
  int k_;
  std::vector<Rational> counts_;
};

// Unnormalized Walsh-Hadamard transform: out[l] = sum_p in[p] (-1)^|l & p|.
// Length must be a power of two.
void WalshHadamardInPlace(std::span<int64_t> values);

Design FullFactorial(int k);

std::vector<int> InteractionColumn(int k, SubsetLabel label);

int64_t JCharacteristic(const Design& d, SubsetLabel label);

FrequencyVector FreqFromDesign(const Design& d);

// Runs in ascending point order, each repeated counts[p] times.
Design DesignFromFreq(const FrequencyVector& f);

// All 2^k J-characteristics, indexed by label. Requires integral counts.
std::vector<int64_t> JVectorFull(const FrequencyVector& f);

// Inverse of JVectorFull: counts[p] = 2^-k sum_l jv[l] (-1)^|l & p|.
FrequencyVector FreqFromFullJ(std::span<const int64_t> jv, int k);

// Largest t such that J_l = 0 for every 1 <= |l| <= t.
int Strength(const Design& d);

// Text format: "N k" on the first line, then N lines of k values. With
// kZeroOne, 0 stands for level +1 and 1 for level -1.
enum class LevelCoding { kPlusMinus, kZeroOne };

Design ReadDesign(std::istream& in, LevelCoding coding = LevelCoding::kPlusMinus);
void WriteDesign(std::ostream& out, const Design& d,
                 LevelCoding coding = LevelCoding::kPlusMinus);

}  // namespace oasym

#endif  // OASYM_FACTORIAL_H_
