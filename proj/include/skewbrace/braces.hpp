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

#ifndef SKEWBRACE_BRACES_HPP_
#define SKEWBRACE_BRACES_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/group.hpp"
#include "skewbrace/holomorph.hpp"

namespace skewbrace {

// Two group structures on {0, ..., n-1}: the additive group is a validated
// FiniteGroup (written +, possibly nonabelian), the circle operation is a
// raw table so that invalid candidates can be represented and rejected by
// check_axioms.
class SkewBrace {
 public:
  SkewBrace(GroupPtr add, std::vector<int> table);

  int n() const noexcept { return n_; }
  const FiniteGroup& add_group() const noexcept { return *add_; }
  const GroupPtr& add_ptr() const noexcept { return add_; }
  int plus(int a, int b) const { return add_->mul(a, b); }
  int neg(int a) const { return add_->inv(a); }
  int circ(int a, int b) const { return circ_[static_cast<std::size_t>(a) * n_ + b]; }
  // Inverse for the circle operation; -1 if the table has none.
  int circ_inv(int a) const { return circ_inv_[a]; }
  // lambda_a(b) = -a + a o b.
  int lambda(int a, int b) const {
    return lambda_[static_cast<std::size_t>(a) * n_ + b];
  }
  const std::vector<int>& circ_table() const noexcept { return circ_; }
  // (B, o) as a validated group; throws DomainError if it is not one.
  GroupPtr circ_group() const;

  // Aut(B, +) indices of lambda_a, when built from a regular subgroup.
  const std::vector<int>& lambda_aut() const noexcept { return lambda_aut_; }
  void set_lambda_aut(std::vector<int> v) { lambda_aut_ = std::move(v); }

 private:
  GroupPtr add_;
  int n_;
  std::vector<int> circ_;
  std::vector<int> circ_inv_;
  std::vector<int> lambda_;
  std::vector<int> lambda_aut_;
};

// a o b = a + f(b) where (a, f) is the element of G over a. Throws
// DomainError unless G is regular.
SkewBrace brace_from_regular(const Holomorph& hol, const HolSubgroup& g);

struct AxiomCheck {
  bool ok = true;
  std::string failure;
  // First counterexample (a, b, c) when a triple identity fails.
  std::optional<std::array<int, 3>> witness;
};

// Group laws for o (with the identity shared with +) and the brace identity
// a o (b + c) = a o b - a + a o c, all exhaustive.
AxiomCheck check_axioms(const SkewBrace& b);

// lambda_(a o b) = lambda_a lambda_b for all a, b.
bool lambda_is_homomorphism(const SkewBrace& b);

struct BraceInvariants {
  int ker_size = 0;
  std::vector<int> kernel;  // ker lambda
  std::vector<int> fix;     // Fix(B)
  std::optional<GroupLabel> mul_label;
  bool biskew = false;
  // Ideals I, J with I + J = B and I, J meeting trivially.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> direct_product;
};

// mul_label is filled when n = p^2 q.
BraceInvariants invariants(const SkewBrace& b, int p, int q);

// Checks x + (y o z) = (x + y) o x' o (x + z) for all triples.
bool is_biskew(const SkewBrace& b);

// Subgroups of (B, +) that are lambda-stable and normal in (B, +) and
// (B, o).
std::vector<std::vector<int>> ideals(const SkewBrace& b);

// A bijection preserving + and o, or nullopt.
std::optional<std::vector<int>> brace_isomorphic(const SkewBrace& b1,
                                                 const SkewBrace& b2);

}  // namespace skewbrace

#endif  // SKEWBRACE_BRACES_HPP_
