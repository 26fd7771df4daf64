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

#include <gtest/gtest.h>

#include "oasym/errors.h"
#include "oasym/symgen.h"

namespace oasym {
namespace {

using nlohmann::json;

TEST(JsonTest, ModelEncoding) {
  const json j = ModelToJson(BuildM(2, 1));
  const json expected = json::parse(R"({"k":2,"t":1,"labels":[[],[1],[2]],
      "rows":[[1,1,1,1],[1,-1,1,-1],[1,1,-1,-1]]})");
  EXPECT_EQ(j, expected);
}

TEST(JsonTest, ModelRoundTripAndValidation) {
  for (int k = 1; k <= 4; ++k) {
    for (int t = 1; t <= k; ++t) {
      const ModelMatrix m = BuildM(k, t);
      const ModelMatrix back = ModelFromJson(json::parse(ModelToJson(m).dump()));
      EXPECT_EQ(back.rows, m.rows);
      EXPECT_EQ(back.labels, m.labels);
    }
  }
  json bad = ModelToJson(BuildM(2, 1));
  bad["rows"][1][0] = -1;
  EXPECT_THROW(ModelFromJson(bad), DomainError);
  json swapped = ModelToJson(BuildM(2, 1));
  std::swap(swapped["labels"][1], swapped["labels"][2]);
  EXPECT_THROW(ModelFromJson(swapped), DomainError);
  EXPECT_THROW(ModelFromJson(json::parse(R"({"k":2})")), DomainError);
}

TEST(JsonTest, Rhs) {
  EXPECT_EQ(RhsToJson(BuildJ(8, 3, 1)), json::parse(R"({"N":8,"values":[8,0,0,0]})"));
}

TEST(JsonTest, PermutationRoundTrip) {
  for (const Permutation& p : Strength2Generators(4).perms) {
    EXPECT_EQ(PermutationFromJson(PermutationToJson(p)), p);
  }
  EXPECT_THROW(PermutationFromJson(json::parse(R"({"degree":3,"image":[0,1]})")), DomainError);
  EXPECT_THROW(PermutationFromJson(json::parse(R"({"degree":2,"image":[1,1]})")), DomainError);
}

TEST(JsonTest, GroupOrderIsDecimalString) {
  const BigInt big = BigInt(2) * 40320 * 40320;
  const json j = GroupReportJson(16, big, 5);
  EXPECT_EQ(j["order"], "3251404800");
  EXPECT_EQ(j["degree"], 16);
  EXPECT_EQ(j["num_generators"], 5);
}

TEST(JsonTest, EnumSummary) {
  EnumResult r;
  r.n = 8;
  r.k = 3;
  r.t = 2;
  r.total_solutions = 3;
  r.representatives.assign(2, FrequencyVector::Uniform(3, 1));
  EXPECT_EQ(EnumSummaryJson(r).dump(), R"({"N":8,"k":3,"orbits":2,"solutions":3,"t":2})");
}

}  // namespace
}  // namespace oasym
