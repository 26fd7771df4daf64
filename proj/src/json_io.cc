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

#include "oasym/json_io.h"

#include "oasym/errors.h"

namespace oasym {

using nlohmann::json;

json ModelToJson(const ModelMatrix& m) {
  json labels = json::array();
  for (SubsetLabel l : m.labels) labels.push_back(LabelFactors(l));
  json rows = json::array();
  for (const auto& row : m.rows) {
    json r = json::array();
    for (int8_t v : row) r.push_back(static_cast<int>(v));
    rows.push_back(std::move(r));
  }
  return {{"k", m.k}, {"t", m.t}, {"labels", labels}, {"rows", rows}};
}

ModelMatrix ModelFromJson(const json& j) {
  try {
    ModelMatrix expected = BuildM(j.at("k").get<int>(), j.at("t").get<int>());
    const json& labels = j.at("labels");
    const json& rows = j.at("rows");
    if (labels.size() != expected.num_rows() || rows.size() != expected.num_rows()) {
      throw DomainError("model JSON has the wrong number of rows");
    }
    for (size_t r = 0; r < expected.num_rows(); ++r) {
      const auto factors = labels[r].get<std::vector<int>>();
      if (LabelFromFactors(factors) != expected.labels[r]) {
        throw DomainError("model JSON label " + std::to_string(r) +
                          " is out of order");
      }
      const auto values = rows[r].get<std::vector<int>>();
      if (values.size() != expected.num_cols()) {
        throw DomainError("model JSON row has the wrong length");
      }
      for (size_t c = 0; c < values.size(); ++c) {
        if (values[c] != expected.rows[r][c]) {
          throw DomainError("model JSON row " + std::to_string(r) +
                            " does not match its label");
        }
      }
    }
    return expected;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed model JSON: ") + e.what());
  }
}

json RhsToJson(const RhsVector& rhs) {
  return {{"N", rhs.n}, {"values", rhs.values}};
}

json PermutationToJson(const Permutation& p) {
  return {{"degree", p.degree()}, {"image", p.image()}};
}

Permutation PermutationFromJson(const json& j) {
  try {
    const size_t degree = j.at("degree").get<size_t>();
    auto image = j.at("image").get<std::vector<uint32_t>>();
    if (image.size() != degree) {
      throw DomainError("permutation JSON image length differs from degree");
    }
    return Permutation(std::move(image));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed permutation JSON: ") + e.what());
  }
}

json GroupReportJson(size_t degree, const BigInt& order, size_t num_generators) {
  return {{"degree", degree},
          {"order", order.str()},
          {"num_generators", num_generators}};
}

json EnumSummaryJson(const EnumResult& r) {
  return {{"N", r.n},
          {"k", r.k},
          {"t", r.t},
          {"solutions", r.total_solutions},
          {"orbits", r.representatives.size()}};
}

}  // namespace oasym
