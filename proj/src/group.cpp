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

#include "skewbrace/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "skewbrace/errors.hpp"
#include "skewbrace/modular.hpp"

namespace skewbrace {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::CyclicP2Q: return "CyclicP2Q";
    case Family::PxPQ: return "PxPQ";
    case Family::P2SemidirectQ: return "P2SemidirectQ";
    case Family::Gk: return "Gk";
    case Family::GF: return "GF";
    case Family::QbyP2_ordP: return "QbyP2_ordP";
    case Family::QbyP2_ordP2: return "QbyP2_ordP2";
    case Family::PxQbyP: return "PxQbyP";
  }
  return "?";
}

std::string GroupLabel::to_string() const {
  std::string out(family_name(family));
  if (family == Family::Gk) out += "(" + std::to_string(k) + ")";
  return out;
}

GroupLabel GroupLabel::parse(std::string_view text) {
  static constexpr Family kAll[] = {
      Family::CyclicP2Q, Family::PxPQ,        Family::P2SemidirectQ,
      Family::Gk,        Family::GF,          Family::QbyP2_ordP,
      Family::QbyP2_ordP2, Family::PxQbyP};
  if (text.starts_with("Gk(") && text.ends_with(")")) {
    std::string num(text.substr(3, text.size() - 4));
    try {
      std::size_t used = 0;
      int k = std::stoi(num, &used);
      if (used == num.size()) return {Family::Gk, k};
    } catch (const std::exception&) {
    }
    throw DomainError("bad group label: " + std::string(text));
  }
  for (Family f : kAll) {
    if (f != Family::Gk && family_name(f) == text) return {f, 0};
  }
  throw DomainError("bad group label: " + std::string(text));
}

int canonical_k(int k, int q) {
  k = static_cast<int>(mod(k, q));
  if (k == 0 || k == 1 || k == q - 1) return k;
  auto inv = inv_mod(k, q);
  return std::min<int>(k, static_cast<int>(*inv));
}

// --- FiniteGroup -----------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<int> table, std::vector<int> generators,
                         std::vector<std::string> generator_names,
                         std::optional<GroupLabel> label)
    : table_(std::move(table)),
      generators_(std::move(generators)),
      generator_names_(std::move(generator_names)),
      label_(std::move(label)) {
  std::size_t sq = 0;
  while (sq * sq < table_.size()) ++sq;
  if (sq * sq != table_.size() || sq == 0) {
    throw DomainError("multiplication table is not square");
  }
  n_ = static_cast<int>(sq);
  for (int v : table_) {
    if (v < 0 || v >= n_) throw DomainError("table entry out of range");
  }
  // Latin square check makes identity and inverses unique.
  for (int a = 0; a < n_; ++a) {
    std::vector<char> row(n_, 0), col(n_, 0);
    for (int b = 0; b < n_; ++b) {
      if (row[mul(a, b)]++ || col[mul(b, a)]++) {
        throw DomainError("multiplication table is not a Latin square");
      }
    }
  }
  identity_ = -1;
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError("no identity element");
  if (n_ <= kDefaultGroupBound) {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < n_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw DomainError("multiplication is not associative");
          }
        }
      }
    }
  } else {
    std::uint64_t s = 0x9E3779B97F4A7C15ULL;
    for (int i = 0; i < 200000; ++i) {
      s ^= s << 13; s ^= s >> 7; s ^= s << 17;
      int a = static_cast<int>(s % n_), b = static_cast<int>((s >> 20) % n_),
          c = static_cast<int>((s >> 40) % n_);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        throw DomainError("multiplication is not associative");
      }
    }
  }
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        inv_[a] = b;
        break;
      }
    }
  }
  orders_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
  class_sizes_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int centralizer = 0;
    for (int b = 0; b < n_; ++b) centralizer += mul(a, b) == mul(b, a);
    class_sizes_[a] = n_ / centralizer;
  }
  for (int gen : generators_) {
    if (gen < 0 || gen >= n_) throw DomainError("generator out of range");
  }
  if (static_cast<int>(skewbrace::closure(*this, generators_).size()) != n_) {
    throw DomainError("generators do not generate the group");
  }
  if (!generator_names_.empty() &&
      generator_names_.size() != generators_.size()) {
    throw DomainError("generator names do not match generators");
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<int> table) {
  // Every element as generator satisfies the constructor, then we shrink.
  std::size_t sq = 0;
  while (sq * sq < table.size()) ++sq;
  std::vector<int> all(sq);
  std::iota(all.begin(), all.end(), 0);
  FiniteGroup g(std::move(table), all);
  g.generators_ = search_generators(g);
  return g;
}

int FiniteGroup::pow(int a, std::int64_t k) const {
  k = mod(k, orders_[a]);
  int result = identity_;
  for (std::int64_t i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

int FiniteGroup::generator(std::string_view name) const {
  for (std::size_t i = 0; i < generator_names_.size(); ++i) {
    if (generator_names_[i] == name) return generators_[i];
  }
  throw DomainError("unknown generator name: " + std::string(name));
}

bool FiniteGroup::is_abelian() const {
  for (int a : generators_) {
    for (int b : generators_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < n_; ++a) {
    if (class_sizes_[a] == 1) z.push_back(a);
  }
  return z;
}

// --- subgroups ---------------------------------------------------------------

std::vector<int> closure(const FiniteGroup& g, std::span<const int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = 1;
  std::vector<int> gens;
  for (int s : seed) {
    if (!in[s] || std::find(gens.begin(), gens.end(), s) == gens.end()) {
      gens.push_back(s);
    }
  }
  // In a finite group closing under right multiplication by generators
  // suffices.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{{g.identity()}};
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<char> in(g.order(), 0);
    for (int x : queue[i]) in[x] = 1;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<int> seed = queue[i];
      seed.push_back(x);
      auto sub = closure(g, seed);
      if (seen.insert(sub).second) queue.push_back(std::move(sub));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Number of elements sharing (order, class size) with x.
std::vector<int> candidate_counts(const FiniteGroup& g) {
  std::map<std::pair<int, int>, int> counts;
  for (int x = 0; x < g.order(); ++x) {
    ++counts[{g.element_order(x), g.class_size(x)}];
  }
  std::vector<int> out(g.order());
  for (int x = 0; x < g.order(); ++x) {
    out[x] = counts[{g.element_order(x), g.class_size(x)}];
  }
  return out;
}

}  // namespace

std::vector<int> search_generators(const FiniteGroup& g) {
  int n = g.order();
  if (n == 1) return {};
  auto cand = candidate_counts(g);
  for (int x = 0; x < n; ++x) {
    if (g.element_order(x) == n) return {x};
  }
  // Best generating pair by candidate product.
  std::int64_t best = -1;
  std::pair<int, int> best_pair;
  for (int x = 0; x < n; ++x) {
    if (x == g.identity()) continue;
    for (int y = x + 1; y < n; ++y) {
      std::int64_t cost = static_cast<std::int64_t>(cand[x]) * cand[y];
      if (best >= 0 && cost >= best) continue;
      int seed[] = {x, y};
      if (static_cast<int>(closure(g, seed).size()) == n) {
        best = cost;
        best_pair = {x, y};
      }
    }
  }
  if (best >= 0) return {best_pair.first, best_pair.second};
  // Greedy: add the element enlarging the closure most.
  std::vector<int> gens;
  std::vector<int> current = closure(g, gens);
  while (static_cast<int>(current.size()) < n) {
    int pick = -1;
    std::size_t pick_size = 0;
    for (int x = 0; x < n; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto seed = gens;
      seed.push_back(x);
      auto c = closure(g, seed);
      if (c.size() > pick_size ||
          (c.size() == pick_size && cand[x] < cand[pick])) {
        pick = x;
        pick_size = c.size();
      }
    }
    gens.push_back(pick);
    current = closure(g, gens);
  }
  return gens;
}

std::optional<std::vector<int>> extend_homomorphism(
    const FiniteGroup& g, std::span<const int> gens, const FiniteGroup& h,
    std::span<const int> images) {
  std::vector<int> map(g.order(), -1);
  std::vector<int> queue{g.identity()};
  map[g.identity()] = h.identity();
  // phi(x s) = phi(x) phi(s) for every x and generator s forces a
  // homomorphism.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int y = g.mul(x, gens[j]);
      int img = h.mul(map[x], images[j]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != g.order()) return std::nullopt;
  return map;
}

bool Morphism::is_homomorphism() const {
  const auto& g = *source;
  const auto& h = *target;
  if (static_cast<int>(map.size()) != g.order()) return false;
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (map[g.mul(x, y)] != h.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

bool Morphism::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> hit(target->order(), 0);
  for (int v : map) {
    if (hit[v]++) return false;
  }
  return true;
}

// --- AutGroup ----------------------------------------------------------------

namespace {
constexpr int kTableLimit = 5000;
constexpr int kKeyBits = 16;
}  // namespace

AutGroup::AutGroup(GroupPtr base, std::vector<std::vector<int>> perms)
    : base_(std::move(base)), n_(base_->order()) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  size_ = static_cast<int>(perms.size());
  perms_.reserve(static_cast<std::size_t>(size_) * n_);
  for (const auto& pm : perms) {
    if (static_cast<int>(pm.size()) != n_) {
      throw DomainError("automorphism has wrong length");
    }
    perms_.insert(perms_.end(), pm.begin(), pm.end());
  }
  key_gens_ = search_generators(*base_);
  if (key_gens_.size() * kKeyBits > 64) {
    throw SizeError("automorphism key needs more than 4 generators");
  }
  std::vector<int> id(n_);
  std::iota(id.begin(), id.end(), 0);
  if (size_ == 0 || perms.front() != id) {
    throw DomainError("automorphism list lacks the identity");
  }
  index_.reserve(size_ * 2);
  for (int f = 0; f < size_; ++f) {
    if (!index_.emplace(key_of(f), f).second) {
      throw DomainError("automorphisms agree on generators but differ");
    }
  }
  if (size_ <= kTableLimit) {
    table_.resize(static_cast<std::size_t>(size_) * size_);
    std::vector<int> img(key_gens_.size());
    for (int f = 0; f < size_; ++f) {
      for (int g = 0; g < size_; ++g) {
        for (std::size_t i = 0; i < key_gens_.size(); ++i) {
          img[i] = apply(f, apply(g, key_gens_[i]));
        }
        auto it = index_.find(pack_key(img));
        if (it == index_.end()) {
          throw DomainError("automorphism list not closed under composition");
        }
        table_[static_cast<std::size_t>(f) * size_ + g] =
            static_cast<std::uint16_t>(it->second);
      }
    }
  }
  inverse_.assign(size_, -1);
  std::vector<int> inv_perm(n_);
  for (int f = 0; f < size_; ++f) {
    for (int x = 0; x < n_; ++x) inv_perm[apply(f, x)] = x;
    inverse_[f] = index_of(inv_perm);
    if (inverse_[f] < 0) {
      throw DomainError("automorphism list not closed under inverses");
    }
  }
  orders_.assign(size_, 0);
  for (int f = 0; f < size_; ++f) {
    int x = f, k = 1;
    while (x != 0) {
      x = compose(x, f);
      ++k;
    }
    orders_[f] = k;
  }
  // Greedy generators, largest element order first.
  std::vector<int> by_order(size_);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return orders_[a] > orders_[b]; });
  std::vector<char> in(size_, 0);
  in[0] = 1;
  int covered = 1;
  for (int f : by_order) {
    if (covered == size_) break;
    if (in[f]) continue;
    generators_.push_back(f);
    auto c = closure(generators_);
    std::fill(in.begin(), in.end(), 0);
    for (int x : c) in[x] = 1;
    covered = static_cast<int>(c.size());
  }
}

std::uint64_t AutGroup::pack_key(std::span<const int> images) const {
  std::uint64_t key = 0;
  for (int v : images) key = (key << kKeyBits) | static_cast<std::uint64_t>(v);
  return key;
}

std::uint64_t AutGroup::key_of(int f) const {
  std::uint64_t key = 0;
  for (int k : key_gens_) {
    key = (key << kKeyBits) | static_cast<std::uint64_t>(apply(f, k));
  }
  return key;
}

int AutGroup::compose(int f, int g) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(f) * size_ + g];
  std::uint64_t key = 0;
  for (int k : key_gens_) {
    key = (key << kKeyBits) |
          static_cast<std::uint64_t>(apply(f, apply(g, k)));
  }
  return index_.find(key)->second;
}

int AutGroup::power(int f, std::int64_t k) const {
  k = mod(k, orders_[f]);
  int result = 0;
  for (std::int64_t i = 0; i < k; ++i) result = compose(result, f);
  return result;
}

int AutGroup::index_of(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) return -1;
  std::uint64_t key = 0;
  for (int k : key_gens_) {
    key = (key << kKeyBits) | static_cast<std::uint64_t>(perm[k]);
  }
  auto it = index_.find(key);
  if (it == index_.end()) return -1;
  auto stored = this->perm(it->second);
  return std::equal(stored.begin(), stored.end(), perm.begin()) ? it->second
                                                                : -1;
}

int AutGroup::index_of_images(std::span<const int> images) const {
  if (images.size() != key_gens_.size()) return -1;
  auto it = index_.find(pack_key(images));
  return it == index_.end() ? -1 : it->second;
}

Morphism AutGroup::element(int f) const {
  auto p = perm(f);
  return {base_, base_, std::vector<int>(p.begin(), p.end())};
}

std::vector<int> AutGroup::closure(std::span<const int> seed) const {
  std::vector<char> in(size_, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : seed) {
      int y = compose(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// --- automorphisms and isomorphisms -----------------------------------------

namespace {

std::vector<int> matching_images(const FiniteGroup& g, int x,
                                 const FiniteGroup& h) {
  std::vector<int> out;
  for (int y = 0; y < h.order(); ++y) {
    if (h.element_order(y) == g.element_order(x) &&
        h.class_size(y) == g.class_size(x)) {
      out.push_back(y);
    }
  }
  return out;
}

bool is_injective(const std::vector<int>& map, int target_order) {
  std::vector<char> hit(target_order, 0);
  for (int v : map) {
    if (hit[v]++) return false;
  }
  return true;
}

}  // namespace

void for_each_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::function<bool(const std::vector<int>&)>& visit) {
  if (g.order() != h.order()) return;
  auto gens = search_generators(g);
  std::vector<std::vector<int>> cands;
  for (int x : gens) cands.push_back(matching_images(g, x, h));
  std::vector<int> images(gens.size());
  std::vector<std::size_t> pos(gens.size(), 0);
  // Odometer over the candidate lists.
  if (gens.empty()) {
    visit(std::vector<int>{h.identity()});
    return;
  }
  for (const auto& c : cands) {
    if (c.empty()) return;
  }
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = cands[i][pos[i]];
    auto map = extend_homomorphism(g, gens, h, images);
    if (map && is_injective(*map, h.order())) {
      if (!visit(*map)) return;
    }
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++pos[i] < cands[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
  }
}

AutPtr compute_automorphisms(const GroupPtr& g, int bound) {
  if (g->order() > bound) {
    throw SizeError("group of order " + std::to_string(g->order()) +
                    " exceeds automorphism bound " + std::to_string(bound));
  }
  std::vector<std::vector<int>> perms;
  for_each_isomorphism(*g, *g, [&](const std::vector<int>& map) {
    perms.push_back(map);
    return true;
  });
  return std::make_shared<const AutGroup>(g, std::move(perms));
}

std::optional<Morphism> are_isomorphic(const GroupPtr& g, const GroupPtr& h) {
  if (g->order() != h->order()) return std::nullopt;
  std::map<std::pair<int, int>, int> sg, sh;
  for (int x = 0; x < g->order(); ++x) {
    ++sg[{g->element_order(x), g->class_size(x)}];
    ++sh[{h->element_order(x), h->class_size(x)}];
  }
  if (sg != sh) return std::nullopt;
  std::optional<Morphism> found;
  for_each_isomorphism(*g, *h, [&](const std::vector<int>& map) {
    found = Morphism{g, h, map};
    return false;
  });
  return found;
}

// --- identification ----------------------------------------------------------

GroupLabel identify_p2q(const FiniteGroup& g, int p, int q) {
  const int n = g.order();
  if (n != p * p * q) {
    throw DomainError("group order " + std::to_string(n) + " is not p^2 q");
  }
  bool has_p2 = false;
  std::vector<int> p_part, q_part;
  for (int x = 0; x < n; ++x) {
    int o = g.element_order(x);
    if (o == p * p) has_p2 = true;
    if (p * p % o == 0) p_part.push_back(x);
    if (q % o == 0) q_part.push_back(x);
  }
  if (g.is_abelian()) {
    for (int x = 0; x < n; ++x) {
      if (g.element_order(x) == n) return {Family::CyclicP2Q, 0};
    }
    return {Family::PxPQ, 0};
  }
  if (static_cast<int>(p_part.size()) == p * p) {
    if (has_p2) return {Family::P2SemidirectQ, 0};
    // Elementary abelian Sylow p-subgroup: read off the action of an
    // element of order q on a basis.
    int s = -1, t = -1;
    for (int x : p_part) {
      if (x != g.identity()) {
        s = x;
        break;
      }
    }
    std::vector<int> coord_i(n, -1), coord_j(n, -1);
    int si = g.identity();
    for (int i = 0; i < p; ++i, si = g.mul(si, s)) coord_i[si] = i;
    for (int x : p_part) {
      if (coord_i[x] < 0) {
        t = x;
        break;
      }
    }
    std::fill(coord_i.begin(), coord_i.end(), -1);
    si = g.identity();
    for (int i = 0; i < p; ++i, si = g.mul(si, s)) {
      int v = si;
      for (int j = 0; j < p; ++j, v = g.mul(v, t)) {
        coord_i[v] = i;
        coord_j[v] = j;
      }
    }
    int e = -1;
    for (int x = 0; x < n; ++x) {
      if (g.element_order(x) == q) {
        e = x;
        break;
      }
    }
    auto conj = [&](int x) { return g.mul(g.mul(e, x), g.inv(e)); };
    // Column vectors of the action matrix.
    std::int64_t a = coord_i[conj(s)], c = coord_j[conj(s)];
    std::int64_t b = coord_i[conj(t)], d = coord_j[conj(t)];
    std::int64_t tr = mod(a + d, p), det = mod(a * d - b * c, p);
    std::vector<std::int64_t> roots;
    for (std::int64_t x = 0; x < p; ++x) {
      if (mod(x * x - tr * x + det, p) == 0) roots.push_back(x);
    }
    if (roots.empty()) return {Family::GF, 0};
    std::int64_t l1 = roots[0];
    std::int64_t l2 = roots.size() > 1 ? roots[1] : roots[0];
    if (l1 == 1 || l2 == 1) return {Family::Gk, 0};
    for (int k = 1; k < q; ++k) {
      if (pow_mod(l1, k, p) == l2) return {Family::Gk, canonical_k(k, q)};
    }
    throw ConsistencyError("eigenvalues of the order-q action are unrelated");
  }
  if (static_cast<int>(q_part.size()) == q) {
    if (!has_p2) return {Family::PxQbyP, 0};
    auto z = g.center().size();
    if (static_cast<int>(z) == p) return {Family::QbyP2_ordP, 0};
    if (z == 1) return {Family::QbyP2_ordP2, 0};
  }
  throw ConsistencyError("group of order " + std::to_string(n) +
                         " matches no family");
}

}  // namespace skewbrace
