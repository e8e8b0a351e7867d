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

#include "skewbrace/mat2.hpp"

#include "skewbrace/errors.hpp"
#include "skewbrace/modular.hpp"

namespace skewbrace {

Mat2 reduce(Mat2 m, std::int64_t p) {
  return {mod(m.a, p), mod(m.b, p), mod(m.c, p), mod(m.d, p)};
}

Mat2 mul(const Mat2& m, const Mat2& n, std::int64_t p) {
  return reduce({m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                 m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d},
                p);
}

Vec2 apply(const Mat2& m, const Vec2& v, std::int64_t p) {
  return {mod(m.a * v.x + m.b * v.y, p), mod(m.c * v.x + m.d * v.y, p)};
}

Mat2 add(const Mat2& m, const Mat2& n, std::int64_t p) {
  return reduce({m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}, p);
}

Mat2 scale(const Mat2& m, std::int64_t s, std::int64_t p) {
  return reduce({m.a * s, m.b * s, m.c * s, m.d * s}, p);
}

std::int64_t det(const Mat2& m, std::int64_t p) {
  return mod(m.a * m.d - m.b * m.c, p);
}

std::optional<Mat2> inverse(const Mat2& m, std::int64_t p) {
  auto di = inv_mod(det(m, p), p);
  if (!di) return std::nullopt;
  return scale({m.d, -m.b, -m.c, m.a}, *di, p);
}

Mat2 power(const Mat2& m, std::int64_t e, std::int64_t p) {
  Mat2 base = reduce(m, p);
  if (e < 0) {
    auto inv = inverse(base, p);
    if (!inv) throw ConstraintError("negative power of a singular matrix");
    base = *inv;
    e = -e;
  }
  Mat2 result = reduce(Mat2::identity(), p);
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

int order(const Mat2& m, std::int64_t p) {
  if (det(m, p) == 0) return 0;
  Mat2 id = reduce(Mat2::identity(), p);
  Mat2 x = reduce(m, p);
  int k = 1;
  while (!(x == id)) {
    x = mul(x, m, p);
    ++k;
  }
  return k;
}

}  // namespace skewbrace
