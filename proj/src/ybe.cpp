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

#include "skewbrace/ybe.hpp"

#include <sstream>

#include "skewbrace/errors.hpp"

namespace skewbrace {

Solution Solution::from_map(int n, const std::vector<std::pair<int, int>>& r) {
  if (r.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("solution map has the wrong size");
  }
  Solution s;
  s.n = n;
  s.sigma.resize(r.size());
  s.tau.resize(r.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto [u, v] = r[static_cast<std::size_t>(x) * n + y];
      s.sigma[static_cast<std::size_t>(x) * n + y] = u;
      s.tau[static_cast<std::size_t>(y) * n + x] = v;
    }
  }
  return s;
}

Solution solution_from_brace(const SkewBrace& b) {
  const int n = b.n();
  std::vector<std::pair<int, int>> r(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      int l = b.lambda(a, c);
      r[static_cast<std::size_t>(a) * n + c] = {
          l, b.circ(b.circ(b.circ_inv(l), a), c)};
    }
  }
  return Solution::from_map(n, r);
}

YbeCheck check_ybe(const Solution& s) {
  const int n = s.n;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // (id x r)(r x id)(id x r)
        auto [y1, z1] = s.r(y, z);
        auto [x2, y2] = s.r(x, y1);
        auto [y3, z3] = s.r(y2, z1);
        // (r x id)(id x r)(r x id)
        auto [a1, b1] = s.r(x, y);
        auto [b2, c2] = s.r(b1, z);
        auto [a3, b3] = s.r(a1, b2);
        if (x2 != a3 || y3 != b3 || z3 != c2) {
          return {false, std::array<int, 3>{x, y, z}};
        }
      }
    }
  }
  return {};
}

bool check_nondegenerate(const Solution& s) {
  const int n = s.n;
  for (int x = 0; x < n; ++x) {
    std::vector<char> hit_s(n, 0), hit_t(n, 0);
    for (int y = 0; y < n; ++y) {
      if (hit_s[s.sigma[static_cast<std::size_t>(x) * n + y]]++) return false;
      if (hit_t[s.tau[static_cast<std::size_t>(x) * n + y]]++) return false;
    }
  }
  return true;
}

YbeCheck check_involutive(const Solution& s) {
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      auto [u, v] = s.r(x, y);
      if (s.r(u, v) != std::make_pair(x, y)) {
        return {false, std::array<int, 3>{x, y, -1}};
      }
    }
  }
  return {};
}

std::string export_solution(const Solution& s) {
  std::ostringstream os;
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      auto [u, v] = s.r(x, y);
      os << (y ? " " : "") << u << "," << v;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace skewbrace
