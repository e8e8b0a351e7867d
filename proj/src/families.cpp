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

#include "skewbrace/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <utility>

#include "skewbrace/errors.hpp"
#include "skewbrace/modular.hpp"

namespace skewbrace {

std::string FamilyParams::to_string() const {
  std::ostringstream os;
  os << "p=" << p << " q=" << q;
  if (t) os << " t=" << *t;
  if (g) os << " g=" << *g;
  if (r) os << " r=" << *r;
  if (h) os << " h=" << *h;
  if (xi) os << " xi=" << *xi;
  return os.str();
}

std::string Regime::tag() const {
  std::vector<std::string> parts;
  if (p_one_mod_q) parts.push_back("p=1(q)");
  if (p_minus_one_mod_q) parts.push_back("p=-1(q)");
  if (q_one_mod_p2) {
    parts.push_back("q=1(p^2)");
  } else if (q_one_mod_p) {
    parts.push_back("q=1(p)");
  }
  if (parts.empty()) return "abelian-only";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
  return out;
}

Regime regime_of(int p, int q) {
  Regime rg;
  rg.p_one_mod_q = (p - 1) % q == 0;
  rg.p_minus_one_mod_q = q > 2 && (p + 1) % q == 0;
  rg.q_one_mod_p = (q - 1) % p == 0;
  rg.q_one_mod_p2 = (q - 1) % (p * p) == 0;
  return rg;
}

namespace {

int pick(const std::vector<std::int64_t>& values, int choice) {
  if (values.empty()) throw ConsistencyError("no unit of the required order");
  std::size_t i = std::min<std::size_t>(choice, values.size() - 1);
  return static_cast<int>(values[i]);
}

bool irreducible_quadratic(int xi, int p) {
  for (int x = 0; x < p; ++x) {
    if (mod(static_cast<std::int64_t>(x) * x + xi * x + 1, p) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

FamilyParams derive_params(int p, int q, int choice) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw DomainError("p and q must be distinct primes");
  }
  FamilyParams fp;
  fp.p = p;
  fp.q = q;
  Regime rg = regime_of(p, q);
  if (rg.p_one_mod_q) {
    fp.t = pick(units_of_order(q, p * p), choice);
    fp.g = pick(units_of_order(q, p), choice);
  }
  if (rg.q_one_mod_p2) {
    fp.h = pick(units_of_order(static_cast<std::int64_t>(p) * p, q), choice);
    fp.r = static_cast<int>(pow_mod(*fp.h, p, q));
  } else if (rg.q_one_mod_p) {
    fp.r = pick(units_of_order(p, q), choice);
  }
  if (rg.p_minus_one_mod_q) {
    std::vector<std::int64_t> valid;
    for (int xi = 1; xi < std::max(p, 2); ++xi) {
      Mat2 f = reduce({0, -1, 1, -xi}, p);
      if (irreducible_quadratic(xi, p) && order(f, p) == q) valid.push_back(xi);
    }
    fp.xi = pick(valid, choice);
    fp.F = reduce({0, -1, 1, -*fp.xi}, p);
  }
  return fp;
}

std::vector<int> gk_parameters(int q) {
  std::vector<int> out{0, 1};
  if (q > 2) out.push_back(q - 1);
  for (int k = 2; k < q - 1; ++k) {
    if (canonical_k(k, q) == k) out.push_back(k);
  }
  return out;
}

namespace {

using Triple = std::array<int, 3>;

struct Layout {
  std::array<int, 3> radix{1, 1, 1};

  int size() const { return radix[0] * radix[1] * radix[2]; }
  int index(const Triple& v) const {
    return v[0] + radix[0] * (v[1] + radix[1] * v[2]);
  }
  Triple coords(int i) const {
    return {i % radix[0], (i / radix[0]) % radix[1], i / (radix[0] * radix[1])};
  }
};

GroupPtr tabulate(const Layout& layout,
                  const std::function<Triple(const Triple&, const Triple&)>& op,
                  const std::vector<Triple>& gens,
                  std::vector<std::string> names, GroupLabel label) {
  int n = layout.size();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    Triple a = layout.coords(i);
    for (int j = 0; j < n; ++j) {
      Triple c = op(a, layout.coords(j));
      for (int s = 0; s < 3; ++s) c[s] = static_cast<int>(mod(c[s], layout.radix[s]));
      table[static_cast<std::size_t>(i) * n + j] = layout.index(c);
    }
  }
  std::vector<int> gen_idx;
  for (const auto& gv : gens) gen_idx.push_back(layout.index(gv));
  return std::make_shared<const FiniteGroup>(std::move(table), gen_idx,
                                             std::move(names), label);
}

// Powers base^0 .. base^(count-1) modulo m.
std::vector<std::int64_t> powers(std::int64_t base, int count, std::int64_t m) {
  std::vector<std::int64_t> out(count);
  std::int64_t x = 1 % m;
  for (int i = 0; i < count; ++i) {
    out[i] = x;
    x = x * base % m;
  }
  return out;
}

void require(bool cond, const GroupLabel& label, const FamilyParams& fp) {
  if (!cond) {
    throw DomainError("group " + label.to_string() + " does not exist for " +
                      fp.to_string());
  }
}

}  // namespace

GroupPtr build_group(const GroupLabel& label, const FamilyParams& fp) {
  const int p = fp.p, q = fp.q, p2 = p * p;
  const Regime rg = regime_of(p, q);
  Layout L;
  switch (label.family) {
    case Family::CyclicP2Q: {
      L.radix = {p2, q, 1};
      return tabulate(
          L, [](const Triple& a, const Triple& b) {
            return Triple{a[0] + b[0], a[1] + b[1], 0};
          },
          {{1, 0, 0}, {0, 1, 0}}, {"sigma", "epsilon"}, {Family::CyclicP2Q, 0});
    }
    case Family::PxPQ: {
      L.radix = {p, p, q};
      return tabulate(
          L, [](const Triple& a, const Triple& b) {
            return Triple{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
          },
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {"sigma", "tau", "epsilon"},
          {Family::PxPQ, 0});
    }
    case Family::P2SemidirectQ: {
      require(rg.p_one_mod_q && fp.t.has_value(), label, fp);
      auto tp = powers(*fp.t, q, p2);
      L.radix = {p2, q, 1};
      return tabulate(
          L, [tp](const Triple& a, const Triple& b) {
            return Triple{static_cast<int>(a[0] + tp[a[1]] * b[0]), a[1] + b[1], 0};
          },
          {{1, 0, 0}, {0, 1, 0}}, {"sigma", "tau"}, {Family::P2SemidirectQ, 0});
    }
    case Family::Gk: {
      require(rg.p_one_mod_q && fp.g.has_value(), label, fp);
      int k = static_cast<int>(mod(label.k, q));
      auto gp = powers(*fp.g, q, p);
      auto gkp = powers(pow_mod(*fp.g, k, p), q, p);
      L.radix = {p, p, q};
      return tabulate(
          L, [gp, gkp](const Triple& a, const Triple& b) {
            return Triple{static_cast<int>(a[0] + gp[a[2]] * b[0]),
                          static_cast<int>(a[1] + gkp[a[2]] * b[1]), a[2] + b[2]};
          },
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {"sigma", "tau", "epsilon"},
          {Family::Gk, canonical_k(k, q)});
    }
    case Family::GF: {
      require(rg.p_minus_one_mod_q && fp.F.has_value(), label, fp);
      std::vector<Mat2> fpow;
      for (int z = 0; z < q; ++z) fpow.push_back(power(*fp.F, z, p));
      L.radix = {p, p, q};
      return tabulate(
          L, [fpow, p](const Triple& a, const Triple& b) {
            Vec2 v = apply(fpow[a[2]], {b[0], b[1]}, p);
            return Triple{static_cast<int>(a[0] + v.x), static_cast<int>(a[1] + v.y),
                          a[2] + b[2]};
          },
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {"sigma", "tau", "epsilon"},
          {Family::GF, 0});
    }
    case Family::QbyP2_ordP:
    case Family::QbyP2_ordP2: {
      bool ord_p = label.family == Family::QbyP2_ordP;
      require(ord_p ? rg.q_one_mod_p && fp.r.has_value()
                    : rg.q_one_mod_p2 && fp.h.has_value(),
              label, fp);
      auto rp = powers(ord_p ? *fp.r : *fp.h, p2, q);
      L.radix = {q, p2, 1};
      return tabulate(
          L, [rp](const Triple& a, const Triple& b) {
            return Triple{static_cast<int>(a[0] + rp[a[1]] * b[0]), a[1] + b[1], 0};
          },
          {{1, 0, 0}, {0, 1, 0}}, {"tau", "sigma"}, {label.family, 0});
    }
    case Family::PxQbyP: {
      require(rg.q_one_mod_p && fp.r.has_value(), label, fp);
      auto rp = powers(*fp.r, p, q);
      L.radix = {q, p, p};
      return tabulate(
          L, [rp](const Triple& a, const Triple& b) {
            return Triple{static_cast<int>(a[0] + rp[a[1]] * b[0]), a[1] + b[1],
                          a[2] + b[2]};
          },
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {"epsilon", "sigma", "tau"},
          {Family::PxQbyP, 0});
    }
  }
  throw DomainError("unknown family");
}

std::vector<GroupPtr> all_groups(const FamilyParams& fp) {
  Regime rg = regime_of(fp.p, fp.q);
  std::vector<GroupLabel> labels{{Family::CyclicP2Q, 0}, {Family::PxPQ, 0}};
  if (rg.p_one_mod_q) {
    labels.push_back({Family::P2SemidirectQ, 0});
    for (int k : gk_parameters(fp.q)) labels.push_back({Family::Gk, k});
  }
  if (rg.p_minus_one_mod_q) labels.push_back({Family::GF, 0});
  if (rg.q_one_mod_p) {
    labels.push_back({Family::QbyP2_ordP, 0});
    labels.push_back({Family::PxQbyP, 0});
  }
  if (rg.q_one_mod_p2) labels.push_back({Family::QbyP2_ordP2, 0});
  std::vector<GroupPtr> out;
  for (const auto& label : labels) {
    auto grp = build_group(label, fp);
    GroupLabel found = identify_p2q(*grp, fp.p, fp.q);
    if (found != label) {
      throw ConsistencyError("built " + label.to_string() + " but identified " +
                             found.to_string());
    }
    out.push_back(std::move(grp));
  }
  return out;
}

std::int64_t aut_order_formula(const GroupLabel& label, int p, int q) {
  const std::int64_t P = p, Q = q;
  switch (label.family) {
    case Family::CyclicP2Q: return P * (P - 1) * (Q - 1);
    case Family::PxPQ: return (P * P - 1) * (P * P - P) * (Q - 1);
    case Family::P2SemidirectQ: return P * P * P * (P - 1);
    case Family::Gk: {
      int k = static_cast<int>(mod(label.k, q));
      if (k == 1) return P * P * P * (P - 1) * (P - 1) * (P + 1);
      if (k == 0) return P * (P - 1) * (P - 1);
      if (k == q - 1) return 2 * P * P * (P - 1) * (P - 1);
      return P * P * (P - 1) * (P - 1);
    }
    case Family::GF: return 2 * P * P * (P * P - 1);
    case Family::QbyP2_ordP: return P * Q * (Q - 1);
    case Family::QbyP2_ordP2: return Q * (Q - 1);
    case Family::PxQbyP: return P * Q * (P - 1) * (Q - 1);
  }
  return 0;
}

// --- StructuredAut -------------------------------------------------------------

StructuredAut::StructuredAut(GroupPtr group, AutPtr auts,
                             std::vector<std::string> names,
                             std::vector<int> moduli,
                             std::map<std::vector<int>, int> index,
                             std::vector<std::vector<int>> coords)
    : group_(std::move(group)),
      auts_(std::move(auts)),
      names_(std::move(names)),
      moduli_(std::move(moduli)),
      index_(std::move(index)),
      coords_(std::move(coords)) {}

int StructuredAut::index(std::span<const int> coords) const {
  if (coords.size() != moduli_.size()) return -1;
  std::vector<int> key(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    key[i] = static_cast<int>(mod(coords[i], moduli_[i]));
  }
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

Morphism StructuredAut::morphism(std::span<const int> coords) const {
  int f = index(coords);
  if (f < 0) throw DomainError("coordinates do not define an automorphism");
  return auts_->element(f);
}

namespace {

// Iterates over the box prod [0, moduli[i]).
void for_each_tuple(const std::vector<int>& moduli,
                    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(moduli.size(), 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    for (; i < v.size(); ++i) {
      if (++v[i] < moduli[i]) break;
      v[i] = 0;
    }
    if (i == v.size()) return;
  }
}

}  // namespace

StructuredAutPtr structured_aut(const GroupPtr& group,
                                const FamilyParams& fp) {
  const FiniteGroup& G = *group;
  if (!G.label()) throw DomainError("structured_aut needs a labelled group");
  const GroupLabel label = *G.label();
  const int p = fp.p, q = fp.q, p2 = p * p;
  auto word = [&](std::initializer_list<std::pair<const char*, std::int64_t>> w) {
    int x = G.identity();
    for (const auto& [name, e] : w) x = G.mul(x, G.pow(G.generator(name), e));
    return x;
  };
  std::vector<std::string> names;
  std::vector<int> moduli;
  std::vector<const char*> gen_names;
  // Images of gen_names for a coordinate tuple, empty when the tuple is
  // outside the parametrization.
  std::function<std::vector<int>(const std::vector<int>&)> images;
  auto unit_p2 = [&](int x) { return x % p != 0; };
  switch (label.family) {
    case Family::CyclicP2Q:
      names = {"i", "j"};
      moduli = {p2, q};
      gen_names = {"sigma", "epsilon"};
      images = [&](const std::vector<int>& c) -> std::vector<int> {
        if (!unit_p2(c[0]) || c[1] == 0) return {};
        return {word({{"sigma", c[0]}}), word({{"epsilon", c[1]}})};
      };
      break;
    case Family::PxPQ:
      names = {"a", "b", "c", "d", "j"};
      moduli = {p, p, p, p, q};
      gen_names = {"sigma", "tau", "epsilon"};
      images = [&](const std::vector<int>& c) -> std::vector<int> {
        if (mod(c[0] * c[3] - c[1] * c[2], p) == 0 || c[4] == 0) return {};
        return {word({{"sigma", c[0]}, {"tau", c[2]}}),
                word({{"sigma", c[1]}, {"tau", c[3]}}),
                word({{"epsilon", c[4]}})};
      };
      break;
    case Family::P2SemidirectQ:
      names = {"i", "j"};
      moduli = {p2, p2};
      gen_names = {"tau", "sigma"};
      images = [&](const std::vector<int>& c) -> std::vector<int> {
        if (!unit_p2(c[1])) return {};
        return {word({{"sigma", c[0]}, {"tau", 1}}), word({{"sigma", c[1]}})};
      };
      break;
    case Family::Gk:
    case Family::GF:
      names = {"n", "m", "a", "b", "c", "d", "e"};
      moduli = {p, p, p, p, p, p, q};
      gen_names = {"sigma", "tau", "epsilon"};
      images = [&](const std::vector<int>& c) -> std::vector<int> {
        if (mod(c[2] * c[5] - c[3] * c[4], p) == 0 || c[6] == 0) return {};
        return {word({{"sigma", c[2]}, {"tau", c[4]}}),
                word({{"sigma", c[3]}, {"tau", c[5]}}),
                word({{"sigma", c[0]}, {"tau", c[1]}, {"epsilon", c[6]}})};
      };
      break;
    case Family::QbyP2_ordP:
      names = {"k", "j", "i"};
      moduli = {p, q, q};
      gen_names = {"tau", "sigma"};
      images = [&](const std::vector<int>& c) -> std::vector<int> {
        if (c[2] == 0) return {};
        return {word({{"tau", c[2]}}),
                word({{"tau", c[1]}, {"sigma", c[0] * p + 1}})};
      };
      break;
    case Family::QbyP2_ordP2:
      names = {"i", "j"};
      moduli = {q, q};
      gen_names = {"tau", "sigma"};
      images = [&](const std::vector<int>& c) -> std::vector<int> {
        if (c[1] == 0) return {};
        return {word({{"tau", c[1]}}), word({{"tau", c[0]}, {"sigma", 1}})};
      };
      break;
    case Family::PxQbyP:
      names = {"l", "i", "s", "j"};
      moduli = {p, p, q, q};
      gen_names = {"epsilon", "tau", "sigma"};
      images = [&](const std::vector<int>& c) -> std::vector<int> {
        if (c[1] == 0 || c[3] == 0) return {};
        return {word({{"epsilon", c[3]}}), word({{"tau", c[1]}}),
                word({{"epsilon", c[2]}, {"tau", c[0]}, {"sigma", 1}})};
      };
      break;
  }
  std::vector<int> gens;
  for (const char* name : gen_names) gens.push_back(G.generator(name));
  std::vector<std::vector<int>> tuples, perms;
  for_each_tuple(moduli, [&](const std::vector<int>& c) {
    auto img = images(c);
    if (img.empty()) return;
    auto map = extend_homomorphism(G, gens, G, img);
    if (!map) return;
    std::vector<char> hit(G.order(), 0);
    for (int v : *map) {
      if (hit[v]++) return;
    }
    tuples.push_back(c);
    perms.push_back(std::move(*map));
  });
  std::int64_t expected = aut_order_formula(label, p, q);
  if (static_cast<std::int64_t>(perms.size()) != expected) {
    throw ConsistencyError("Aut(" + label.to_string() + ") has " +
                           std::to_string(perms.size()) +
                           " coordinate automorphisms, formula gives " +
                           std::to_string(expected));
  }
  auto auts = std::make_shared<const AutGroup>(group, perms);
  if (auts->size() != expected) {
    throw ConsistencyError("coordinates of Aut(" + label.to_string() +
                           ") are not injective");
  }
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> coords(auts->size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    int f = auts->index_of(perms[i]);
    index.emplace(tuples[i], f);
    coords[f] = tuples[i];
  }
  return std::make_shared<const StructuredAut>(group, std::move(auts),
                                               std::move(names),
                                               std::move(moduli),
                                               std::move(index),
                                               std::move(coords));
}

}  // namespace skewbrace
