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

#include "skewbrace/modular.hpp"

#include <numeric>

namespace skewbrace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  std::int64_t b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return result;
}

std::optional<std::int64_t> inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    if (m == 1) return 0;
    return std::nullopt;
  }
  return mod(old_s, m);
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  a = mod(a, m);
  if (std::gcd(a, m) != 1) return 0;
  std::int64_t x = a;
  std::int64_t k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> units_of_order(std::int64_t order, std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < m; ++a) {
    if (multiplicative_order(a, m) == order) out.push_back(a);
  }
  if (m == 1 && order == 1) out.push_back(0);
  return out;
}

}  // namespace skewbrace
