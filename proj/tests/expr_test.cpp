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


#include "skewbrace/expr.hpp"

#include <gtest/gtest.h>

#include "skewbrace/errors.hpp"

namespace skewbrace {
namespace {

ExprContext context(std::int64_t p, std::optional<std::int64_t> xi = std::nullopt) {
  ExprContext ctx;
  ctx.p = p;
  ctx.xi = xi;
  ctx.vars["p"] = p;
  ctx.vars["q"] = std::int64_t{3};
  return ctx;
}

TEST(Expr, IntegerPrecedence) {
  auto ctx = context(5);
  EXPECT_EQ(evaluate_int("1 + 2 * 3", ctx), 7);
  EXPECT_EQ(evaluate_int("(1 + 2) * 3", ctx), 9);
  EXPECT_EQ(evaluate_int("2 ^ 3 ^ 2", ctx), 512);
  EXPECT_EQ(evaluate_int("-2 ^ 2", ctx), -4);
  EXPECT_EQ(evaluate_int("p^2*q", ctx), 75);
  EXPECT_EQ(evaluate_int("12 / 4", ctx), 3);
}

TEST(Expr, ComparisonsAndLogic) {
  auto ctx = context(5);
  EXPECT_EQ(evaluate_int("p > 2 && q == 3", ctx), 1);
  EXPECT_EQ(evaluate_int("p == 2 || q != 3", ctx), 0);
  EXPECT_EQ(evaluate_int("!(p <= 4)", ctx), 1);
}

TEST(Expr, ModulusMakesDivisionAnInverse) {
  auto ctx = context(7);
  EXPECT_EQ(evaluate_int("1/3", ctx, 7), 5);
  EXPECT_EQ(evaluate_int("-1/2", ctx, 7), 3);
  EXPECT_EQ(evaluate_int("inv(3)", ctx, 7), 5);
  EXPECT_EQ(evaluate_int("mod(-1, 4)", ctx), 3);
}

TEST(Expr, UndefinedArithmeticIsAConstraintError) {
  auto ctx = context(7);
  EXPECT_THROW(evaluate_int("7 / 2", ctx), ConstraintError);
  EXPECT_THROW(evaluate_int("1 / 7", ctx, 7), ConstraintError);
  EXPECT_THROW(evaluate_int("1 / 0", ctx), ConstraintError);
}

TEST(Expr, MalformedInputIsADomainError) {
  auto ctx = context(7);
  EXPECT_THROW(evaluate("1 +", ctx), DomainError);
  EXPECT_THROW(evaluate("unknown_name", ctx), DomainError);
  EXPECT_THROW(evaluate("vec(1)", ctx), DomainError);
  EXPECT_THROW(evaluate_int("vec(1, 2)", ctx), DomainError);
  EXPECT_THROW(evaluate("(1 + 2", ctx), DomainError);
}

TEST(Expr, MatrixAndVectorArithmeticModP) {
  auto ctx = context(5);
  ctx.vars["F"] = Mat2{0, 4, 1, 4};
  EXPECT_EQ(std::get<Vec2>(evaluate("mat(1, 2, 3, 4) * vec(1, 1)", ctx)), (Vec2{3, 2}));
  EXPECT_EQ(std::get<Mat2>(evaluate("F^3", ctx)), Mat2::identity());
  EXPECT_EQ(std::get<Mat2>(evaluate("2 + F", ctx)), (Mat2{2, 4, 1, 1}));
  EXPECT_EQ(std::get<Vec2>(evaluate("vec(6, -1) - vec(1, 1)", ctx)), (Vec2{0, 3}));
}

TEST(Expr, HVanishesOnTheCompanionMatrix) {
  // F is the companion matrix of x^2 + xi x + 1, so H(F) = 0.
  for (std::int64_t xi = 0; xi < 5; ++xi) {
    auto ctx = context(5, xi);
    ctx.vars["F"] = Mat2{0, 4, 1, (5 - xi) % 5};
    EXPECT_EQ(std::get<Mat2>(evaluate("H(F)", ctx)), (Mat2{0, 0, 0, 0})) << xi;
  }
}

TEST(Expr, PsiMatchesItsDefinition) {
  const std::int64_t p = 11, xi = 3;
  auto ctx = context(p, xi);
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      std::int64_t want = ((x * x + y * y - x + y - xi * x * y) % p + p) % p;
      ASSERT_EQ(psi({x, y}, p, xi), want);
      ctx.vars["v"] = Vec2{x, y};
      ASSERT_EQ(evaluate_int("psi(v)", ctx), want);
    }
  }
}

TEST(Expr, PsiRepIsTheFirstPreimage) {
  const std::int64_t p = 5, xi = 1;
  for (std::int64_t a = 0; a < p; ++a) {
    std::optional<Vec2> first;
    for (std::int64_t x = 0; x < p && !first; ++x) {
      for (std::int64_t y = 0; y < p && !first; ++y) {
        if (psi({x, y}, p, xi) == a) first = Vec2{x, y};
      }
    }
    ASSERT_TRUE(first.has_value());
    EXPECT_EQ(psi_rep(a, p, xi), *first);
  }
}

TEST(Expr, ValueToStringIsReadable) {
  EXPECT_EQ(value_to_string(Value{std::int64_t{4}}), "4");
  EXPECT_EQ(value_to_string(Value{Vec2{1, 2}}), "vec(1, 2)");
}

}  // namespace
}  // namespace skewbrace
