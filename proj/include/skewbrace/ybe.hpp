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

// Set-theoretic solutions r(x, y) = (sigma_x(y), tau_y(x)) of the braid
// relation (id x r)(r x id)(id x r) = (r x id)(id x r)(r x id).

#ifndef SKEWBRACE_YBE_HPP_
#define SKEWBRACE_YBE_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/braces.hpp"

namespace skewbrace {

struct Solution {
  int n = 0;
  std::vector<int> sigma;  // sigma[x * n + y] = sigma_x(y)
  std::vector<int> tau;    // tau[y * n + x] = tau_y(x)

  std::pair<int, int> r(int x, int y) const {
    return {sigma[static_cast<std::size_t>(x) * n + y],
            tau[static_cast<std::size_t>(y) * n + x]};
  }
  // Builds a solution from the full map (x, y) -> r(x, y), indexed x*n+y.
  static Solution from_map(int n, const std::vector<std::pair<int, int>>& r);
};

// r(a, b) = (lambda_a(b), lambda_a(b)' o a o b), with ' the circle inverse.
// This is the Guarnieri-Vendramin construction; sigma_a = lambda_a.
Solution solution_from_brace(const SkewBrace& b);

struct YbeCheck {
  bool ok = true;
  std::optional<std::array<int, 3>> witness;
};

YbeCheck check_ybe(const Solution& s);
bool check_nondegenerate(const Solution& s);
// r^2 = id; on failure witness holds (x, y, -1).
YbeCheck check_involutive(const Solution& s);

// One line per x: "sigma_x(y),tau_y(x)" for y = 0..n-1, space separated.
std::string export_solution(const Solution& s);

}  // namespace skewbrace

#endif  // SKEWBRACE_YBE_HPP_
