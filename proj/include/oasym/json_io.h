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

// Stable JSON encodings. See docs/json_schemas.md for examples.
//
//   model       {"k":K,"t":T,"labels":[[factors...],...],"rows":[[+-1...],...]}
//   rhs         {"N":n,"values":[...]}
//   permutation {"degree":n,"image":[...]}
//   group       {"degree":n,"order":"<decimal>","num_generators":m}
//   enum        {"N":..,"k":..,"t":..,"solutions":..,"orbits":..}

#ifndef OASYM_JSON_IO_H_
#define OASYM_JSON_IO_H_

#include <span>

#include "json.hpp"
#include "oasym/ilp_model.h"
#include "oasym/oa_enum.h"
#include "oasym/perm_group.h"
#include "oasym/permutation.h"

namespace oasym {

nlohmann::json ModelToJson(const ModelMatrix& m);
// Validates shape, label order and row contents against BuildM.
ModelMatrix ModelFromJson(const nlohmann::json& j);

nlohmann::json RhsToJson(const RhsVector& rhs);

nlohmann::json PermutationToJson(const Permutation& p);
Permutation PermutationFromJson(const nlohmann::json& j);

nlohmann::json GroupReportJson(size_t degree, const BigInt& order,
                               size_t num_generators);

nlohmann::json EnumSummaryJson(const EnumResult& r);

}  // namespace oasym

#endif  // OASYM_JSON_IO_H_
