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

#ifndef SKEWBRACE_MAT2_HPP_
#define SKEWBRACE_MAT2_HPP_

#include <array>
#include <cstdint>
#include <optional>

namespace skewbrace {

// Column vector over Z/p.
struct Vec2 {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// 2x2 matrix [[a, b], [c, d]] over Z/p acting on column vectors.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 reduce(Mat2 m, std::int64_t p);
Mat2 mul(const Mat2& m, const Mat2& n, std::int64_t p);
Vec2 apply(const Mat2& m, const Vec2& v, std::int64_t p);
Mat2 add(const Mat2& m, const Mat2& n, std::int64_t p);
Mat2 scale(const Mat2& m, std::int64_t s, std::int64_t p);
std::int64_t det(const Mat2& m, std::int64_t p);
std::optional<Mat2> inverse(const Mat2& m, std::int64_t p);
// Negative exponents use the inverse; throws ConstraintError if singular.
Mat2 power(const Mat2& m, std::int64_t e, std::int64_t p);
// Multiplicative order in GL2(p), or 0 when singular.
int order(const Mat2& m, std::int64_t p);

}  // namespace skewbrace

#endif  // SKEWBRACE_MAT2_HPP_
