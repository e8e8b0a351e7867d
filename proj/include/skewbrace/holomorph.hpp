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

// The holomorph A x| Aut(A) in pair form. Elements are never tabulated; a
// pair (a, f) is packed as f * |A| + a.

#ifndef SKEWBRACE_HOLOMORPH_HPP_
#define SKEWBRACE_HOLOMORPH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

using Packed = std::uint32_t;

struct HolElement {
  int a = 0;
  int f = 0;
  friend bool operator==(const HolElement&, const HolElement&) = default;
};

class Holomorph {
 public:
  Holomorph(GroupPtr base, AutPtr auts);

  const FiniteGroup& base() const noexcept { return *base_; }
  const GroupPtr& base_ptr() const noexcept { return base_; }
  const AutGroup& auts() const noexcept { return *auts_; }
  const AutPtr& auts_ptr() const noexcept { return auts_; }
  int n() const noexcept { return n_; }
  std::int64_t order() const noexcept {
    return static_cast<std::int64_t>(n_) * auts_->size();
  }

  Packed pack(int a, int f) const {
    return static_cast<Packed>(f) * static_cast<Packed>(n_) + static_cast<Packed>(a);
  }
  Packed pack(HolElement x) const { return pack(x.a, x.f); }
  HolElement unpack(Packed x) const {
    return {static_cast<int>(x % n_), static_cast<int>(x / n_)};
  }
  int pi1(Packed x) const { return static_cast<int>(x % n_); }
  int pi2(Packed x) const { return static_cast<int>(x / n_); }
  Packed identity() const { return pack(base_->identity(), 0); }

  // (a, f)(b, g) = (a f(b), f g).
  Packed mul(Packed x, Packed y) const {
    int a = pi1(x), f = pi2(x), b = pi1(y), g = pi2(y);
    return pack(base_->mul(a, auts_->apply(f, b)), auts_->compose(f, g));
  }
  // (a, f)^-1 = (f^-1(a^-1), f^-1).
  Packed inv(Packed x) const {
    int fi = auts_->inverse(pi2(x));
    return pack(auts_->apply(fi, base_->inv(pi1(x))), fi);
  }
  Packed power(Packed x, std::int64_t k) const;
  // (1, h) x (1, h)^-1 = (h(a), h f h^-1).
  Packed conjugate(int h, Packed x) const {
    return pack(auts_->apply(h, pi1(x)),
                auts_->compose(auts_->compose(h, pi2(x)), auts_->inverse(h)));
  }

 private:
  GroupPtr base_;
  AutPtr auts_;
  int n_;
};

HolElement hol_mul(const Holomorph& hol, HolElement x, HolElement y);
HolElement hol_inv(const Holomorph& hol, HolElement x);

// A subgroup of the holomorph as a sorted list of packed elements.
struct HolSubgroup {
  std::vector<Packed> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Packed x) const;
  friend bool operator==(const HolSubgroup&, const HolSubgroup&) = default;
  friend auto operator<=>(const HolSubgroup&, const HolSubgroup&) = default;
};

struct HolSubgroupHash {
  std::size_t operator()(const HolSubgroup& s) const noexcept;
};

// Subgroup generated by gens; nullopt if it would exceed max_size.
std::optional<HolSubgroup> hol_closure(const Holomorph& hol,
                                       std::span<const Packed> gens,
                                       std::size_t max_size);

// Incremental closure for subgroups on which pi_1 is injective. Grows from
// a closed state and fails as soon as two elements share a first
// coordinate. Reusable across calls to avoid allocation.
class SemiregularClosure {
 public:
  explicit SemiregularClosure(const Holomorph& hol);

  // Resets to the trivial subgroup.
  void reset();
  // Restores a state saved by elements(); gens must generate it.
  void assign(std::span<const Packed> elements, std::span<const Packed> gens);
  // Adds x to the generators and closes. Returns false (and leaves the
  // state unspecified) on a pi_1 collision or when the size would exceed
  // the limit.
  bool extend(Packed x, std::size_t limit);
  const std::vector<Packed>& elements() const noexcept { return elems_; }
  const std::vector<Packed>& generators() const noexcept { return gens_; }
  bool covers(int a) const { return owner_[a] >= 0; }
  int owner(int a) const { return owner_[a]; }

 private:
  const Holomorph* hol_;
  std::vector<int> owner_;
  std::vector<Packed> elems_;
  std::vector<Packed> gens_;
};

std::vector<int> pi1_image(const Holomorph& hol, const HolSubgroup& s);
// pi_2(S) as a sorted list of Aut indices.
std::vector<int> pi2_image(const Holomorph& hol, const HolSubgroup& s);

// |S| = |A| and pi_1 bijective, cross-checked against |S| = |A| and
// S meeting {1} x Aut(A) trivially. Throws ConsistencyError if the two
// criteria disagree.
bool is_regular(const Holomorph& hol, const HolSubgroup& s);

HolSubgroup conjugate(const Holomorph& hol, int h, const HolSubgroup& s);

struct Pi1Bound {
  // Subgroup of A containing pi_1 of the generated subgroup.
  std::vector<int> bound;
  // Union of the cyclic groups <u> over generators (u, alpha) with
  // alpha(u) = u; these lie in pi_1 of the generated subgroup.
  std::vector<int> guaranteed;
};

Pi1Bound pi1_closure_bound(const Holomorph& hol, std::span<const Packed> gens);

}  // namespace skewbrace

#endif  // SKEWBRACE_HOLOMORPH_HPP_
