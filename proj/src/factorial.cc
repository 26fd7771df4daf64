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

#include "oasym/factorial.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "oasym/errors.h"

namespace oasym {

void CheckFactorCount(int k) {
  if (k < 1 || k > kMaxFactors) {
    throw DomainError("factor count must lie in [1, 16], got " +
                      std::to_string(k));
  }
}

std::vector<int> LabelFactors(SubsetLabel label) {
  std::vector<int> factors;
  for (int i = 0; label != 0; ++i, label >>= 1) {
    if (label & 1u) factors.push_back(i + 1);
  }
  return factors;
}

SubsetLabel LabelFromFactors(std::span<const int> factors) {
  SubsetLabel label = 0;
  for (int f : factors) {
    if (f < 1 || f > kMaxFactors) {
      throw DomainError("factor index out of range: " + std::to_string(f));
    }
    const SubsetLabel bit = SubsetLabel{1} << (f - 1);
    if (label & bit) throw DomainError("repeated factor index: " + std::to_string(f));
    label |= bit;
  }
  return label;
}

std::string LabelName(SubsetLabel label) {
  if (label == 0) return "1";
  std::string name = "x";
  bool first = true;
  for (int f : LabelFactors(label)) {
    if (!first) name += ',';
    name += std::to_string(f);
    first = false;
  }
  return name;
}

Design::Design(int num_factors, std::vector<int8_t> entries)
    : num_factors_(num_factors), entries_(std::move(entries)) {
  CheckFactorCount(num_factors);
  if (entries_.empty() || entries_.size() % num_factors != 0) {
    throw DomainError("design entries must form at least one full run");
  }
  num_runs_ = static_cast<int>(entries_.size() / num_factors);
  for (int8_t v : entries_) {
    if (v != 1 && v != -1) throw DomainError("design entries must be +1 or -1");
  }
}

PointIndex Design::RunPoint(int r) const {
  PointIndex p = 0;
  const auto row = run(r);
  for (int i = 0; i < num_factors_; ++i) {
    if (row[i] == -1) p |= PointIndex{1} << i;
  }
  return p;
}

FrequencyVector::FrequencyVector(int k, std::vector<Rational> counts)
    : k_(k), counts_(std::move(counts)) {
  CheckFactorCount(k);
  if (counts_.size() != NumPoints(k)) {
    throw DomainError("frequency vector length must be 2^k");
  }
}

FrequencyVector FrequencyVector::FromIntegers(int k,
                                              std::span<const int64_t> counts) {
  return FrequencyVector(k, std::vector<Rational>(counts.begin(), counts.end()));
}

FrequencyVector FrequencyVector::Uniform(int k, Rational value) {
  CheckFactorCount(k);
  return FrequencyVector(k, std::vector<Rational>(NumPoints(k), value));
}

bool FrequencyVector::IsNonNegative() const {
  for (const Rational& c : counts_) {
    if (c < 0) return false;
  }
  return true;
}

bool FrequencyVector::IsIntegral() const {
  for (const Rational& c : counts_) {
    if (c.denominator() != 1) return false;
  }
  return true;
}

std::vector<int64_t> FrequencyVector::IntegerCounts() const {
  std::vector<int64_t> out;
  out.reserve(counts_.size());
  for (const Rational& c : counts_) {
    if (c.denominator() != 1) {
      throw DomainError("frequency vector has a non-integral count");
    }
    out.push_back(c.numerator());
  }
  return out;
}

Rational FrequencyVector::Total() const {
  Rational total = 0;
  for (const Rational& c : counts_) total += c;
  return total;
}

void WalshHadamardInPlace(std::span<int64_t> values) {
  const size_t n = values.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw DomainError("Walsh-Hadamard length must be a power of two");
  }
  for (size_t half = 1; half < n; half <<= 1) {
    for (size_t block = 0; block < n; block += 2 * half) {
      for (size_t i = block; i < block + half; ++i) {
        const int64_t a = values[i];
        const int64_t b = values[i + half];
        values[i] = a + b;
        values[i + half] = a - b;
      }
    }
  }
}

Design FullFactorial(int k) {
  CheckFactorCount(k);
  const uint32_t n = NumPoints(k);
  std::vector<int8_t> entries;
  entries.reserve(static_cast<size_t>(n) * k);
  for (PointIndex p = 0; p < n; ++p) {
    for (int i = 0; i < k; ++i) entries.push_back(static_cast<int8_t>(Level(p, i)));
  }
  return Design(k, std::move(entries));
}

std::vector<int> InteractionColumn(int k, SubsetLabel label) {
  CheckFactorCount(k);
  if (label >= NumPoints(k)) throw DomainError("label has factors beyond k");
  std::vector<int> col(NumPoints(k));
  for (PointIndex p = 0; p < col.size(); ++p) col[p] = InteractionSign(label, p);
  return col;
}

int64_t JCharacteristic(const Design& d, SubsetLabel label) {
  if (label >= NumPoints(d.num_factors())) {
    throw DomainError("label has factors beyond k");
  }
  int64_t sum = 0;
  for (int r = 0; r < d.num_runs(); ++r) {
    sum += InteractionSign(label, d.RunPoint(r));
  }
  return sum;
}

FrequencyVector FreqFromDesign(const Design& d) {
  std::vector<int64_t> counts(NumPoints(d.num_factors()), 0);
  for (int r = 0; r < d.num_runs(); ++r) ++counts[d.RunPoint(r)];
  return FrequencyVector::FromIntegers(d.num_factors(), counts);
}

Design DesignFromFreq(const FrequencyVector& f) {
  const std::vector<int64_t> counts = f.IntegerCounts();
  std::vector<int8_t> entries;
  for (PointIndex p = 0; p < counts.size(); ++p) {
    if (counts[p] < 0) throw DomainError("negative count in frequency vector");
    for (int64_t c = 0; c < counts[p]; ++c) {
      for (int i = 0; i < f.k(); ++i) {
        entries.push_back(static_cast<int8_t>(Level(p, i)));
      }
    }
  }
  return Design(f.k(), std::move(entries));
}

std::vector<int64_t> JVectorFull(const FrequencyVector& f) {
  std::vector<int64_t> values = f.IntegerCounts();
  WalshHadamardInPlace(values);
  return values;
}

FrequencyVector FreqFromFullJ(std::span<const int64_t> jv, int k) {
  CheckFactorCount(k);
  if (jv.size() != NumPoints(k)) {
    throw DomainError("J vector length must be 2^k");
  }
  // The transform is its own inverse up to the factor 2^k.
  std::vector<int64_t> values(jv.begin(), jv.end());
  WalshHadamardInPlace(values);
  std::vector<Rational> counts;
  counts.reserve(values.size());
  for (int64_t v : values) counts.emplace_back(v, int64_t{1} << k);
  return FrequencyVector(k, std::move(counts));
}

int Strength(const Design& d) {
  const int k = d.num_factors();
  const std::vector<int64_t> jv = JVectorFull(FreqFromDesign(d));
  // Smallest |l| >= 1 with J_l != 0, minus one.
  int first_nonzero = k + 1;
  for (SubsetLabel l = 1; l < jv.size(); ++l) {
    if (jv[l] != 0) first_nonzero = std::min(first_nonzero, LabelSize(l));
  }
  return first_nonzero - 1;
}

Design ReadDesign(std::istream& in, LevelCoding coding) {
  long long n = 0;
  int k = 0;
  if (!(in >> n >> k)) throw DomainError("design header must be \"N k\"");
  if (n < 1) throw DomainError("design must have at least one run");
  CheckFactorCount(k);
  std::vector<int8_t> entries;
  entries.reserve(static_cast<size_t>(n) * k);
  for (long long i = 0; i < n * k; ++i) {
    int v = 0;
    if (!(in >> v)) throw DomainError("design body is truncated");
    if (coding == LevelCoding::kZeroOne) {
      if (v != 0 && v != 1) throw DomainError("0/1 design entry expected");
      v = v == 0 ? 1 : -1;
    } else if (v != 1 && v != -1) {
      throw DomainError("+1/-1 design entry expected");
    }
    entries.push_back(static_cast<int8_t>(v));
  }
  return Design(k, std::move(entries));
}

void WriteDesign(std::ostream& out, const Design& d, LevelCoding coding) {
  out << d.num_runs() << ' ' << d.num_factors() << '\n';
  for (int r = 0; r < d.num_runs(); ++r) {
    for (int i = 0; i < d.num_factors(); ++i) {
      if (i > 0) out << ' ';
      const int v = d.at(r, i);
      out << (coding == LevelCoding::kZeroOne ? (v == 1 ? 0 : 1) : v);
    }
    out << '\n';
  }
}

}  // namespace oasym
