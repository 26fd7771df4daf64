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

#ifndef OASYM_ERRORS_H_
#define OASYM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace oasym {

// Raised when an argument violates an operation's precondition (factor count
// out of range, mismatched degrees, non-integral counts, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a computation would exceed a configured budget or cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oasym

#endif  // OASYM_ERRORS_H_
