// Copyright 2026 The Skewbrace Authors
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

#ifndef SKEWBRACE_ERRORS_HPP_
#define SKEWBRACE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace skewbrace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside a supported size or work budget.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Argument valid in type but not in meaning (wrong regime, non-regular
// subgroup, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagree. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Witness arithmetic undefined for the requested parameters.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewbrace

#endif  // SKEWBRACE_ERRORS_HPP_
