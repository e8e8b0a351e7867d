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

#include <cctype>
#include <sstream>
#include <vector>

#include "skewbrace/errors.hpp"
#include "skewbrace/modular.hpp"

namespace skewbrace {

std::string value_to_string(const Value& v) {
  std::ostringstream os;
  if (auto* i = std::get_if<std::int64_t>(&v)) {
    os << *i;
  } else if (auto* u = std::get_if<Vec2>(&v)) {
    os << "vec(" << u->x << ", " << u->y << ")";
  } else {
    const Mat2& m = std::get<Mat2>(v);
    os << "mat(" << m.a << ", " << m.b << ", " << m.c << ", " << m.d << ")";
  }
  return os.str();
}

std::int64_t psi(const Vec2& v, std::int64_t p, std::int64_t xi) {
  std::int64_t x = v.x, y = v.y;
  return mod(x * x + y * y - x + y - mod(xi * x, p) * y, p);
}

Vec2 psi_rep(std::int64_t a, std::int64_t p, std::int64_t xi) {
  a = mod(a, p);
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      if (psi({x, y}, p, xi) == a) return {x, y};
    }
  }
  throw ConstraintError("psi does not take the value " + std::to_string(a));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExprContext& ctx)
      : text_(text), ctx_(ctx) {}

  Value parse(std::optional<std::int64_t> modulus) {
    Value v = parse_or(modulus);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("expression '" + std::string(text_) + "': " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::int64_t need_p() const {
    if (ctx_.p <= 0) fail("vector arithmetic needs p");
    return ctx_.p;
  }

  std::int64_t as_int(const Value& v) const {
    if (auto* i = std::get_if<std::int64_t>(&v)) return *i;
    fail("integer expected, got " + value_to_string(v));
  }

  Mat2 as_mat(const Value& v) const {
    if (auto* m = std::get_if<Mat2>(&v)) return *m;
    if (auto* i = std::get_if<std::int64_t>(&v)) {
      std::int64_t k = mod(*i, need_p());
      return {k, 0, 0, k};
    }
    fail("matrix expected, got " + value_to_string(v));
  }

  static Value reduce_int(std::int64_t v, std::optional<std::int64_t> m) {
    return m ? mod(v, *m) : v;
  }

  Value parse_or(std::optional<std::int64_t> m) {
    Value v = parse_and(m);
    while (accept("||")) {
      Value w = parse_and(m);
      v = static_cast<std::int64_t>(as_int(v) != 0 || as_int(w) != 0);
    }
    return v;
  }

  Value parse_and(std::optional<std::int64_t> m) {
    Value v = parse_cmp(m);
    while (accept("&&")) {
      Value w = parse_cmp(m);
      v = static_cast<std::int64_t>(as_int(v) != 0 && as_int(w) != 0);
    }
    return v;
  }

  Value parse_cmp(std::optional<std::int64_t> m) {
    Value v = parse_sum(m);
    static constexpr std::string_view kOps[] = {"==", "!=", "<=", ">=", "<", ">"};
    for (std::string_view op : kOps) {
      if (!accept(op)) continue;
      Value w = parse_sum(m);
      if (v.index() != 0 || w.index() != 0) {
        if (op == "==") return static_cast<std::int64_t>(v == w);
        if (op == "!=") return static_cast<std::int64_t>(v != w);
        fail("ordering is only defined for integers");
      }
      std::int64_t a = as_int(v), b = as_int(w);
      bool r = op == "==" ? a == b
             : op == "!=" ? a != b
             : op == "<=" ? a <= b
             : op == ">=" ? a >= b
             : op == "<"  ? a < b
                          : a > b;
      return static_cast<std::int64_t>(r);
    }
    return v;
  }

  Value add(const Value& v, const Value& w, int sign, std::optional<std::int64_t> m) {
    if (v.index() == 0 && w.index() == 0) {
      return reduce_int(as_int(v) + sign * as_int(w), m);
    }
    if (auto* a = std::get_if<Vec2>(&v)) {
      auto* b = std::get_if<Vec2>(&w);
      if (!b) fail("vector plus non-vector");
      std::int64_t p = need_p();
      return Vec2{mod(a->x + sign * b->x, p), mod(a->y + sign * b->y, p)};
    }
    if (w.index() == 1) fail("non-vector plus vector");
    std::int64_t p = need_p();
    return skewbrace::add(as_mat(v), scale(as_mat(w), sign, p), p);
  }

  Value parse_sum(std::optional<std::int64_t> m) {
    Value v = parse_product(m);
    for (;;) {
      skip_space();
      // "||" and "&&" are handled above; a lone '-' or '+' continues the sum.
      if (accept("+")) {
        v = add(v, parse_product(m), 1, m);
      } else if (pos_ < text_.size() && text_[pos_] == '-') {
        ++pos_;
        v = add(v, parse_product(m), -1, m);
      } else {
        return v;
      }
    }
  }

  Value multiply(const Value& v, const Value& w, std::optional<std::int64_t> m) {
    if (v.index() == 0 && w.index() == 0) {
      return reduce_int(as_int(v) * as_int(w), m);
    }
    std::int64_t p = need_p();
    if (auto* b = std::get_if<Vec2>(&w)) {
      if (v.index() == 1) fail("vector times vector");
      return apply(as_mat(v), *b, p);
    }
    if (v.index() == 1) {
      if (w.index() != 0) fail("vector times matrix");
      std::int64_t k = as_int(w);
      const Vec2& a = std::get<Vec2>(v);
      return Vec2{mod(a.x * k, p), mod(a.y * k, p)};
    }
    return mul(as_mat(v), as_mat(w), p);
  }

  Value divide(const Value& v, const Value& w, std::optional<std::int64_t> m) {
    if (v.index() == 0 && w.index() == 0) {
      std::int64_t a = as_int(v), b = as_int(w);
      if (m) {
        auto bi = inv_mod(b, *m);
        if (!bi) {
          throw ConstraintError(std::to_string(b) + " is not invertible mod " +
                                std::to_string(*m) + " in '" + std::string(text_) + "'");
        }
        return mod(a * *bi, *m);
      }
      if (b == 0 || a % b != 0) {
        throw ConstraintError("inexact division " + std::to_string(a) + "/" +
                              std::to_string(b) + " in '" + std::string(text_) + "'");
      }
      return a / b;
    }
    std::int64_t p = need_p();
    if (w.index() == 1) fail("division by a vector");
    auto inv = inverse(as_mat(w), p);
    if (!inv) throw ConstraintError("singular divisor in '" + std::string(text_) + "'");
    return multiply(v, *inv, m);
  }

  Value parse_product(std::optional<std::int64_t> m) {
    Value v = parse_unary(m);
    for (;;) {
      if (accept("*")) {
        v = multiply(v, parse_unary(m), m);
      } else if (accept("/")) {
        v = divide(v, parse_unary(m), m);
      } else {
        return v;
      }
    }
  }

  Value parse_unary(std::optional<std::int64_t> m) {
    skip_space();
    if (accept("!")) {
      if (pos_ < text_.size() && text_[pos_] == '=') fail("unexpected '='");
      return static_cast<std::int64_t>(as_int(parse_unary(m)) == 0);
    }
    if (accept("-")) return multiply(static_cast<std::int64_t>(-1), parse_unary(m), m);
    return parse_power(m);
  }

  Value power(const Value& base, std::int64_t e, std::optional<std::int64_t> m) {
    if (auto* i = std::get_if<std::int64_t>(&base)) {
      if (m) {
        std::int64_t b = mod(*i, *m);
        if (e < 0) {
          auto bi = inv_mod(b, *m);
          if (!bi) throw ConstraintError("negative power of a non-unit in '" + std::string(text_) + "'");
          b = *bi;
          e = -e;
        }
        return pow_mod(b, e, *m);
      }
      if (e < 0) fail("negative exponent without a modulus");
      std::int64_t r = 1;
      for (std::int64_t k = 0; k < e; ++k) r *= *i;
      return r;
    }
    if (base.index() == 1) fail("power of a vector");
    return skewbrace::power(std::get<Mat2>(base), e, need_p());
  }

  Value parse_power(std::optional<std::int64_t> m) {
    Value base = parse_primary(m);
    if (accept("^")) {
      // Exponents are exact integers: F^(c+1) must not be reduced mod p.
      std::int64_t e = as_int(parse_unary(std::nullopt));
      return power(base, e, m);
    }
    return base;
  }

  std::vector<Value> parse_args(std::optional<std::int64_t> m) {
    std::vector<Value> args;
    if (accept(")")) return args;
    do {
      args.push_back(parse_or(m));
    } while (accept(","));
    expect(")");
    return args;
  }

  Value call(const std::string& name, std::optional<std::int64_t> m) {
    std::optional<std::int64_t> pm;
    if (name == "vec" || name == "mat" || name == "psi_rep") pm = need_p();
    auto args = parse_args(name == "mod" ? std::nullopt : (pm ? pm : m));
    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail(name + " takes " + std::to_string(n) + " arguments");
    };
    if (name == "vec") {
      arity(2);
      return Vec2{as_int(args[0]), as_int(args[1])};
    }
    if (name == "mat") {
      arity(4);
      return Mat2{as_int(args[0]), as_int(args[1]), as_int(args[2]), as_int(args[3])};
    }
    if (name == "inv") {
      arity(1);
      return divide(static_cast<std::int64_t>(1), args[0], m);
    }
    if (name == "mod") {
      arity(2);
      std::int64_t md = as_int(args[1]);
      if (md <= 0) fail("mod needs a positive modulus");
      return reduce_int(mod(as_int(args[0]), md), m);
    }
    if (name == "H") {
      arity(1);
      std::int64_t p = need_p();
      if (!ctx_.xi) fail("H needs xi");
      Mat2 x = as_mat(args[0]);
      Mat2 r = skewbrace::add(mul(x, x, p), scale(x, *ctx_.xi, p), p);
      return skewbrace::add(r, Mat2::identity(), p);
    }
    if (name == "psi" || name == "psi_rep") {
      arity(1);
      if (!ctx_.xi) fail(name + " needs xi");
      if (name == "psi_rep") return psi_rep(as_int(args[0]), need_p(), *ctx_.xi);
      auto* v = std::get_if<Vec2>(&args[0]);
      if (!v) fail("psi takes a vector");
      return reduce_int(psi(*v, need_p(), *ctx_.xi), m);
    }
    fail("unknown function " + name);
  }

  Value parse_primary(std::optional<std::int64_t> m) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = parse_or(m);
      expect(")");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_++] - '0');
      }
      return reduce_int(v, m);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (accept("(")) return call(name, m);
      if (name == "I") return Mat2::identity();
      auto it = ctx_.vars.find(name);
      if (it == ctx_.vars.end()) fail("unknown name " + name);
      if (auto* i = std::get_if<std::int64_t>(&it->second)) return reduce_int(*i, m);
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Value evaluate(std::string_view text, const ExprContext& ctx,
               std::optional<std::int64_t> modulus) {
  return Parser(text, ctx).parse(modulus);
}

std::int64_t evaluate_int(std::string_view text, const ExprContext& ctx,
                          std::optional<std::int64_t> modulus) {
  Value v = evaluate(text, ctx, modulus);
  if (auto* i = std::get_if<std::int64_t>(&v)) return *i;
  throw DomainError("expression '" + std::string(text) + "' is not an integer");
}

}  // namespace skewbrace
