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

#ifndef SKEWBRACE_MODULAR_HPP_
#define SKEWBRACE_MODULAR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace skewbrace {

// Least non-negative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> inv_mod(std::int64_t a, std::int64_t m);

// Multiplicative order of a modulo m; 0 when a is not a unit.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

// All units of exact multiplicative order `order` modulo m, ascending.
std::vector<std::int64_t> units_of_order(std::int64_t order, std::int64_t m);

}  // namespace skewbrace

#endif  // SKEWBRACE_MODULAR_HPP_
