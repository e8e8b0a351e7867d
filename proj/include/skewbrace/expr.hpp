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

// A small expression language for witness recipes.
//
// Values are integers, column vectors over Z/p or 2x2 matrices over Z/p.
// Integers are exact unless the context carries a modulus m, in which case
// every integer result is reduced mod m and `/` is the modular inverse.
// Vectors and matrices always live mod p.
//
//   expr    := or
//   or      := and ('||' and)*
//   and     := cmp ('&&' cmp)*
//   cmp     := sum (('=='|'!='|'<'|'<='|'>'|'>=') sum)?
//   sum     := product (('+'|'-') product)*
//   product := unary (('*'|'/') unary)*
//   unary   := ('-'|'!') unary | power
//   power   := primary ('^' unary)?
//   primary := number | name | name '(' args ')' | '(' expr ')'
//
// Built-in functions: vec(x, y), mat(a, b, c, d), inv(x), mod(x, m),
// H(M) = M^2 + xi M + 1, psi(v), psi_rep(a). Arguments of vec, mat and
// psi_rep are evaluated mod p. Mixed operations promote an integer k to
// the scalar matrix k I.

#ifndef SKEWBRACE_EXPR_HPP_
#define SKEWBRACE_EXPR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "skewbrace/mat2.hpp"

namespace skewbrace {

using Value = std::variant<std::int64_t, Vec2, Mat2>;

std::string value_to_string(const Value& v);

struct ExprContext {
  std::int64_t p = 0;
  std::optional<std::int64_t> xi;
  std::map<std::string, Value, std::less<>> vars;
};

// Evaluates text. Throws ConstraintError on undefined arithmetic (a
// non-invertible divisor, an inexact division without a modulus) and
// DomainError on syntax or type errors.
Value evaluate(std::string_view text, const ExprContext& ctx,
               std::optional<std::int64_t> modulus = std::nullopt);

// Evaluates to an integer; DomainError for vectors and matrices.
std::int64_t evaluate_int(std::string_view text, const ExprContext& ctx,
                          std::optional<std::int64_t> modulus = std::nullopt);

// x^2 + y^2 - x + y - xi x y mod p.
std::int64_t psi(const Vec2& v, std::int64_t p, std::int64_t xi);

// First (x, y) in row-major order with psi(x, y) = a.
Vec2 psi_rep(std::int64_t a, std::int64_t p, std::int64_t xi);

}  // namespace skewbrace

#endif  // SKEWBRACE_EXPR_HPP_
