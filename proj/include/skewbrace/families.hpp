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

// Constructors for the groups of order p^2 q and coordinate descriptions
// of their automorphism groups.
//
// Presentations (all generators named as in the witness data):
//   CyclicP2Q      sigma^(p^2) = epsilon^q = 1, abelian
//   PxPQ           sigma^p = tau^p = epsilon^q = 1, abelian
//   P2SemidirectQ  sigma^(p^2) = tau^q = 1, tau sigma tau^-1 = sigma^t
//   Gk             sigma^p = tau^p = epsilon^q = 1, [sigma, tau] = 1,
//                  epsilon sigma epsilon^-1 = sigma^g,
//                  epsilon tau epsilon^-1 = tau^(g^k)
//   GF             as Gk, but epsilon acts on (sigma, tau) through the
//                  companion matrix F = [[0, -1], [1, -xi]]
//   QbyP2_ordP     tau^q = sigma^(p^2) = 1, sigma tau sigma^-1 = tau^r
//   QbyP2_ordP2    tau^q = sigma^(p^2) = 1, sigma tau sigma^-1 = tau^h
//   PxQbyP         epsilon^q = sigma^p = tau^p = 1, tau central,
//                  sigma epsilon sigma^-1 = epsilon^r

#ifndef SKEWBRACE_FAMILIES_HPP_
#define SKEWBRACE_FAMILIES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewbrace/group.hpp"
#include "skewbrace/mat2.hpp"

namespace skewbrace {

struct FamilyParams {
  int p = 0;
  int q = 0;
  std::optional<int> t;   // order q modulo p^2
  std::optional<int> g;   // order q modulo p
  std::optional<int> r;   // order p modulo q
  std::optional<int> h;   // order p^2 modulo q
  std::optional<int> xi;  // x^2 + xi x + 1 irreducible mod p, F of order q
  std::optional<Mat2> F;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
  std::string to_string() const;
};

// Congruence conditions selecting the nonabelian families. Several can hold
// at once (order 12).
struct Regime {
  bool p_one_mod_q = false;        // p = 1 (mod q)
  bool p_minus_one_mod_q = false;  // p = -1 (mod q), q odd
  bool q_one_mod_p = false;        // q = 1 (mod p)
  bool q_one_mod_p2 = false;       // q = 1 (mod p^2)

  std::string tag() const;
};

Regime regime_of(int p, int q);

// Parameters at their smallest valid values. With choice = c > 0 the
// (c+1)-th smallest valid value is taken where one exists. When q = 1
// (mod p^2) the order-p unit is r = h^p, tying the two cyclic actions
// together.
FamilyParams derive_params(int p, int q, int choice = 0);

// Representatives of {k, 1/k} used for the Gk family: 0, 1, q-1 and the
// smaller member of every remaining inverse pair.
std::vector<int> gk_parameters(int q);

// Throws DomainError when the label does not exist in the params' regime.
// For Gk the raw k is used in the presentation; the label is canonical.
GroupPtr build_group(const GroupLabel& label, const FamilyParams& params);

// One representative per isomorphism class of order p^2 q.
std::vector<GroupPtr> all_groups(const FamilyParams& params);

// Order formula for Aut of the given family.
std::int64_t aut_order_formula(const GroupLabel& label, int p, int q);

// Aut(A) described by integer coordinates. Each coordinate tuple fixes the
// images of the presentation generators; see coordinate_names().
class StructuredAut {
 public:
  StructuredAut(GroupPtr group, AutPtr auts, std::vector<std::string> names,
                std::vector<int> moduli,
                std::map<std::vector<int>, int> index,
                std::vector<std::vector<int>> coords);

  const GroupPtr& group() const noexcept { return group_; }
  const AutPtr& auts() const noexcept { return auts_; }
  const std::vector<std::string>& coordinate_names() const noexcept {
    return names_;
  }
  const std::vector<int>& moduli() const noexcept { return moduli_; }
  const std::vector<int>& coords(int f) const { return coords_[f]; }
  // Aut index of the coordinates (reduced by moduli()), or -1 if invalid.
  int index(std::span<const int> coords) const;
  Morphism morphism(std::span<const int> coords) const;

 private:
  GroupPtr group_;
  AutPtr auts_;
  std::vector<std::string> names_;
  std::vector<int> moduli_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> coords_;
};

using StructuredAutPtr = std::shared_ptr<const StructuredAut>;

// Coordinates by family:
//   CyclicP2Q      (i, j)             sigma -> sigma^i, epsilon -> epsilon^j
//   PxPQ           (a, b, c, d, j)    (sigma, tau) -> M = [[a,b],[c,d]],
//                                     epsilon -> epsilon^j
//   P2SemidirectQ  (i, j)             tau -> sigma^i tau, sigma -> sigma^j
//   Gk, GF         (n, m, a, b, c, d, e)
//                                     (sigma, tau) -> M, epsilon ->
//                                     sigma^n tau^m epsilon^e
//   QbyP2_ordP     (k, j, i)          tau -> tau^i,
//                                     sigma -> tau^j sigma^(kp+1)
//   QbyP2_ordP2    (i, j)             tau -> tau^j, sigma -> tau^i sigma
//   PxQbyP         (l, i, s, j)       epsilon -> epsilon^j, tau -> tau^i,
//                                     sigma -> epsilon^s tau^l sigma
// The matrix M sends sigma to sigma^a tau^c and tau to sigma^b tau^d.
// Throws ConsistencyError if the count disagrees with aut_order_formula.
StructuredAutPtr structured_aut(const GroupPtr& group,
                                const FamilyParams& params);

}  // namespace skewbrace

#endif  // SKEWBRACE_FAMILIES_HPP_
