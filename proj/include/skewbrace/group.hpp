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

// Finite groups given by full multiplication tables, their automorphism
// groups, isomorphism testing and identification of groups of order p^2 q.

#ifndef SKEWBRACE_GROUP_HPP_
#define SKEWBRACE_GROUP_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace skewbrace {

enum class Family {
  CyclicP2Q,
  PxPQ,
  P2SemidirectQ,
  Gk,
  GF,
  QbyP2_ordP,
  QbyP2_ordP2,
  PxQbyP,
};

std::string_view family_name(Family f);

// Isomorphism type of a group of order p^2 q. For Family::Gk the parameter
// k is stored in canonical form (see canonical_k), otherwise it is 0.
struct GroupLabel {
  Family family = Family::CyclicP2Q;
  int k = 0;

  std::string to_string() const;
  // Accepts the output of to_string, e.g. "PxQbyP" or "Gk(2)".
  static GroupLabel parse(std::string_view text);

  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
  friend auto operator<=>(const GroupLabel&, const GroupLabel&) = default;
};

// Canonical representative of {k, 1/k mod q}: 0, 1 and q-1 are fixed,
// otherwise the smaller of k and its inverse.
int canonical_k(int k, int q);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Group on the carrier {0, ..., n-1} given by a row-major Cayley table.
// The constructor validates the group axioms (associativity exhaustively)
// and that the generators generate; violations throw DomainError.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<int> table, std::vector<int> generators,
              std::vector<std::string> generator_names = {},
              std::optional<GroupLabel> label = std::nullopt);

  // Builds a group from a table alone, choosing a small generating set.
  static FiniteGroup from_table(std::vector<int> table);

  int order() const noexcept { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int identity() const noexcept { return identity_; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, std::int64_t k) const;
  int element_order(int a) const { return orders_[a]; }
  int class_size(int a) const { return class_sizes_[a]; }

  const std::vector<int>& table() const noexcept { return table_; }
  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& generator_names() const noexcept {
    return generator_names_;
  }
  // Index of the named presentation generator; throws DomainError.
  int generator(std::string_view name) const;
  const std::optional<GroupLabel>& label() const noexcept { return label_; }

  bool is_abelian() const;
  std::vector<int> center() const;

 private:
  int n_;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<int> class_sizes_;
  std::vector<int> generators_;
  std::vector<std::string> generator_names_;
  std::optional<GroupLabel> label_;
};

// Smallest subgroup containing seed; sorted ascending.
std::vector<int> closure(const FiniteGroup& g, std::span<const int> seed);

// All subgroups of g, each sorted, listed in ascending lexicographic order.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

// A small generating set, chosen to keep the number of candidate images
// (elements of equal order and class size) low.
std::vector<int> search_generators(const FiniteGroup& g);

// Extends gens -> images to a homomorphism g -> h. Returns nullopt when the
// assignment does not respect the relations of g.
std::optional<std::vector<int>> extend_homomorphism(
    const FiniteGroup& g, std::span<const int> gens, const FiniteGroup& h,
    std::span<const int> images);

struct Morphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

// Automorphism group stored as sorted permutations of the base carrier.
// Index 0 is always the identity.
class AutGroup {
 public:
  AutGroup(GroupPtr base, std::vector<std::vector<int>> perms);

  const FiniteGroup& base() const noexcept { return *base_; }
  const GroupPtr& base_ptr() const noexcept { return base_; }
  int size() const noexcept { return size_; }
  int identity() const noexcept { return 0; }

  int apply(int f, int x) const {
    return perms_[static_cast<std::size_t>(f) * n_ + x];
  }
  std::span<const int> perm(int f) const {
    return {perms_.data() + static_cast<std::size_t>(f) * n_,
            static_cast<std::size_t>(n_)};
  }
  // x -> f(g(x)).
  int compose(int f, int g) const;
  int inverse(int f) const { return inverse_[f]; }
  int power(int f, std::int64_t k) const;
  int element_order(int f) const { return orders_[f]; }
  // Index of an automorphism given by its full permutation, or -1.
  int index_of(std::span<const int> perm) const;
  // Index of the automorphism sending key_generators()[i] to images[i].
  int index_of_images(std::span<const int> images) const;
  const std::vector<int>& key_generators() const noexcept { return key_gens_; }

  Morphism element(int f) const;
  const std::vector<int>& generators() const noexcept { return generators_; }
  std::vector<int> closure(std::span<const int> seed) const;

 private:
  std::uint64_t pack_key(std::span<const int> images) const;
  std::uint64_t key_of(int f) const;

  GroupPtr base_;
  int n_;
  int size_;
  std::vector<int> perms_;
  std::vector<int> key_gens_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> generators_;
};

using AutPtr = std::shared_ptr<const AutGroup>;

// Calls visit(map) for every isomorphism g -> h in a fixed order, stopping
// early when visit returns false.
void for_each_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::function<bool(const std::vector<int>&)>& visit);

inline constexpr int kDefaultGroupBound = 200;

// All automorphisms of g via generator-image backtracking. Throws SizeError
// when |g| exceeds bound.
AutPtr compute_automorphisms(const GroupPtr& g, int bound = kDefaultGroupBound);

std::optional<Morphism> are_isomorphic(const GroupPtr& g, const GroupPtr& h);

// Identifies a group of order p^2 q from invariants. Throws DomainError on
// the wrong order and ConsistencyError when no family matches.
GroupLabel identify_p2q(const FiniteGroup& g, int p, int q);

}  // namespace skewbrace

#endif  // SKEWBRACE_GROUP_HPP_
