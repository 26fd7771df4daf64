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

// End-to-end reproduction checks, shared by `oasym check` and the acceptance
// test binary. Every check pins its expected values and time limits here.

#ifndef OASYM_CHECK_SUITE_H_
#define OASYM_CHECK_SUITE_H_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace oasym {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CheckSpec {
  int id;
  std::string name;
  std::function<CheckResult()> run;
};

CheckResult CheckWreathOrders();           // 1
CheckResult CheckStrength2Orders();        // 2
CheckResult CheckBruteForceOrders();       // 3
CheckResult CheckRefineMatchesBrute();     // 4
CheckResult CheckK3Exception();            // 5
CheckResult CheckRhoRelations();           // 6
CheckResult CheckHalfCombinations();       // 7
CheckResult CheckBasisImageForms();        // 8
CheckResult CheckFeasibilityTransport();   // 9
CheckResult CheckEnumerationCounts();      // 10
CheckResult CheckModelInvariants();        // 11

std::vector<CheckSpec> AllChecks();

// Runs every check, printing one line per check to `out`. Timings are
// optional so that the CLI output stays byte-identical across runs; time
// limits are enforced either way.
std::vector<CheckResult> RunCheckSuite(std::ostream& out, bool show_seconds = true);

std::string FormatCheckLine(const CheckResult& r, bool show_seconds = true);

}  // namespace oasym

#endif  // OASYM_CHECK_SUITE_H_
