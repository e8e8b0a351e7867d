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

#include "skewbrace/holomorph.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "skewbrace/errors.hpp"
#include "skewbrace/modular.hpp"

namespace skewbrace {

Holomorph::Holomorph(GroupPtr base, AutPtr auts)
    : base_(std::move(base)), auts_(std::move(auts)), n_(base_->order()) {
  if (&auts_->base() != base_.get()) {
    throw DomainError("automorphism group belongs to a different group");
  }
  if (order() > static_cast<std::int64_t>(UINT32_MAX)) {
    throw SizeError("holomorph too large for packed elements");
  }
}

Packed Holomorph::power(Packed x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Packed result = identity();
  while (k > 0) {
    if (k & 1) result = mul(result, x);
    x = mul(x, x);
    k >>= 1;
  }
  return result;
}

HolElement hol_mul(const Holomorph& hol, HolElement x, HolElement y) {
  return hol.unpack(hol.mul(hol.pack(x), hol.pack(y)));
}

HolElement hol_inv(const Holomorph& hol, HolElement x) {
  return hol.unpack(hol.inv(hol.pack(x)));
}

bool HolSubgroup::contains(Packed x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::size_t HolSubgroupHash::operator()(const HolSubgroup& s) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Packed x : s.elements) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::optional<HolSubgroup> hol_closure(const Holomorph& hol,
                                       std::span<const Packed> gens,
                                       std::size_t max_size) {
  std::unordered_set<Packed> seen{hol.identity()};
  std::vector<Packed> elems{hol.identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Packed s : gens) {
      Packed y = hol.mul(elems[i], s);
      if (seen.insert(y).second) {
        elems.push_back(y);
        if (elems.size() > max_size) return std::nullopt;
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return HolSubgroup{std::move(elems)};
}

SemiregularClosure::SemiregularClosure(const Holomorph& hol)
    : hol_(&hol), owner_(hol.n(), -1) {
  reset();
}

void SemiregularClosure::reset() {
  for (Packed x : elems_) owner_[hol_->pi1(x)] = -1;
  elems_.clear();
  gens_.clear();
  Packed e = hol_->identity();
  elems_.push_back(e);
  owner_[hol_->pi1(e)] = hol_->pi2(e);
}

void SemiregularClosure::assign(std::span<const Packed> elements,
                                std::span<const Packed> gens) {
  for (Packed x : elems_) owner_[hol_->pi1(x)] = -1;
  elems_.assign(elements.begin(), elements.end());
  gens_.assign(gens.begin(), gens.end());
  for (Packed x : elems_) owner_[hol_->pi1(x)] = hol_->pi2(x);
}

bool SemiregularClosure::extend(Packed x, std::size_t limit) {
  int a = hol_->pi1(x);
  if (owner_[a] >= 0) return owner_[a] == hol_->pi2(x);
  gens_.push_back(x);
  // Old elements times the old generators stay inside; everything else
  // must be visited again with the enlarged generator list.
  std::size_t old_size = elems_.size();
  auto add = [&](Packed y) {
    int b = hol_->pi1(y);
    int f = hol_->pi2(y);
    if (owner_[b] < 0) {
      owner_[b] = f;
      elems_.push_back(y);
      return true;
    }
    return owner_[b] == f;
  };
  for (std::size_t i = 0; i < old_size; ++i) {
    if (!add(hol_->mul(elems_[i], x))) return false;
    if (elems_.size() > limit) return false;
  }
  for (std::size_t i = old_size; i < elems_.size(); ++i) {
    for (Packed s : gens_) {
      if (!add(hol_->mul(elems_[i], s))) return false;
    }
    if (elems_.size() > limit) return false;
  }
  return true;
}

std::vector<int> pi1_image(const Holomorph& hol, const HolSubgroup& s) {
  std::vector<int> out;
  for (Packed x : s.elements) out.push_back(hol.pi1(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> pi2_image(const Holomorph& hol, const HolSubgroup& s) {
  std::vector<int> out;
  for (Packed x : s.elements) out.push_back(hol.pi2(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_regular(const Holomorph& hol, const HolSubgroup& s) {
  bool size_ok = static_cast<int>(s.size()) == hol.n();
  bool bijective = size_ok && static_cast<int>(pi1_image(hol, s).size()) == hol.n();
  bool trivial_stabilizer = true;
  for (Packed x : s.elements) {
    if (hol.pi1(x) == hol.base().identity() && hol.pi2(x) != 0) {
      trivial_stabilizer = false;
      break;
    }
  }
  bool other = size_ok && trivial_stabilizer;
  if (bijective != other) {
    throw ConsistencyError("regularity criteria disagree");
  }
  return bijective;
}

HolSubgroup conjugate(const Holomorph& hol, int h, const HolSubgroup& s) {
  HolSubgroup out;
  out.elements.reserve(s.size());
  const AutGroup& aut = hol.auts();
  int hi = aut.inverse(h);
  for (Packed x : s.elements) {
    out.elements.push_back(hol.pack(aut.apply(h, hol.pi1(x)),
                                    aut.compose(aut.compose(h, hol.pi2(x)), hi)));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

Pi1Bound pi1_closure_bound(const Holomorph& hol, std::span<const Packed> gens) {
  const FiniteGroup& A = hol.base();
  const AutGroup& aut = hol.auts();
  std::vector<int> us, alphas;
  for (Packed x : gens) {
    us.push_back(hol.pi1(x));
    alphas.push_back(hol.pi2(x));
  }
  auto U = closure(A, us);
  auto image = aut.closure(alphas);
  std::vector<int> seeds;
  for (int h : image) {
    for (int g : U) seeds.push_back(aut.apply(h, g));
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  Pi1Bound out;
  out.bound = closure(A, seeds);
  std::vector<int> fixed;
  for (Packed x : gens) {
    int u = hol.pi1(x);
    if (aut.apply(hol.pi2(x), u) == u) {
      for (int y = A.identity(), k = 0; k < A.element_order(u); ++k) {
        fixed.push_back(y);
        y = A.mul(y, u);
      }
    }
  }
  if (fixed.empty()) fixed.push_back(A.identity());
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  out.guaranteed = std::move(fixed);
  return out;
}

}  // namespace skewbrace
