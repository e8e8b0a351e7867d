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

#include "skewbrace/braces.hpp"

#include <algorithm>
#include <sstream>

#include "skewbrace/errors.hpp"

namespace skewbrace {

SkewBrace::SkewBrace(GroupPtr add, std::vector<int> table)
    : add_(std::move(add)), n_(add_->order()), circ_(std::move(table)) {
  if (circ_.size() != static_cast<std::size_t>(n_) * n_) {
    throw DomainError("circle table has the wrong size");
  }
  for (int v : circ_) {
    if (v < 0 || v >= n_) throw DomainError("circle table entry out of range");
  }
  const int e = add_->identity();
  circ_inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (circ(a, b) == e && circ(b, a) == e) {
        circ_inv_[a] = b;
        break;
      }
    }
  }
  lambda_.resize(circ_.size());
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      lambda_[static_cast<std::size_t>(a) * n_ + b] = plus(neg(a), circ(a, b));
    }
  }
}

GroupPtr SkewBrace::circ_group() const {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(circ_));
}

SkewBrace brace_from_regular(const Holomorph& hol, const HolSubgroup& g) {
  if (!is_regular(hol, g)) throw DomainError("subgroup is not regular");
  const FiniteGroup& A = hol.base();
  const AutGroup& aut = hol.auts();
  const int n = hol.n();
  std::vector<int> over(n);
  for (Packed x : g.elements) over[hol.pi1(x)] = hol.pi2(x);
  std::vector<int> circ(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      circ[static_cast<std::size_t>(a) * n + b] = A.mul(a, aut.apply(over[a], b));
    }
  }
  // a -> (a, f_a) is a bijection B -> G; it is multiplicative exactly when
  // f_(a o b) = f_a f_b.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (aut.compose(over[a], over[b]) !=
          over[circ[static_cast<std::size_t>(a) * n + b]]) {
        throw ConsistencyError("(A, o) is not isomorphic to G");
      }
    }
  }
  SkewBrace out(hol.base_ptr(), std::move(circ));
  out.set_lambda_aut(std::move(over));
  return out;
}

AxiomCheck check_axioms(const SkewBrace& b) {
  const int n = b.n();
  const int e = b.add_group().identity();
  AxiomCheck out;
  auto fail = [&](std::string msg, std::optional<std::array<int, 3>> w) {
    out.ok = false;
    out.failure = std::move(msg);
    out.witness = w;
    return out;
  };
  for (int a = 0; a < n; ++a) {
    if (b.circ(e, a) != a || b.circ(a, e) != a) {
      return fail("additive identity is not the circle identity",
                  std::array<int, 3>{e, a, e});
    }
    if (b.circ_inv(a) < 0) {
      return fail("element without circle inverse", std::array<int, 3>{a, a, a});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = b.circ(x, y);
      for (int z = 0; z < n; ++z) {
        if (b.circ(xy, z) != b.circ(x, b.circ(y, z))) {
          return fail("circle operation is not associative",
                      std::array<int, 3>{x, y, z});
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      int ax = b.circ(a, x);
      int left = b.plus(ax, b.neg(a));
      for (int c = 0; c < n; ++c) {
        // a o (x + c) = a o x - a + a o c
        if (b.circ(a, b.plus(x, c)) != b.plus(left, b.circ(a, c))) {
          return fail("brace compatibility fails", std::array<int, 3>{a, x, c});
        }
      }
    }
  }
  return out;
}

bool lambda_is_homomorphism(const SkewBrace& b) {
  const int n = b.n();
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      int ac = b.circ(a, c);
      for (int x = 0; x < n; ++x) {
        if (b.lambda(ac, x) != b.lambda(a, b.lambda(c, x))) return false;
      }
    }
  }
  return true;
}

bool is_biskew(const SkewBrace& b) {
  const int n = b.n();
  for (int x = 0; x < n; ++x) {
    int xi = b.circ_inv(x);
    for (int y = 0; y < n; ++y) {
      int left_x = b.circ(b.plus(x, y), xi);
      for (int z = 0; z < n; ++z) {
        if (b.plus(x, b.circ(y, z)) != b.circ(left_x, b.plus(x, z))) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> ideals(const SkewBrace& b) {
  const int n = b.n();
  std::vector<std::vector<int>> out;
  for (auto& sub : all_subgroups(b.add_group())) {
    std::vector<char> in(n, 0);
    for (int x : sub) in[x] = 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      int ai = b.circ_inv(a);
      for (int x : sub) {
        if (!in[b.lambda(a, x)] ||
            !in[b.plus(b.plus(a, x), b.neg(a))] ||
            !in[b.circ(b.circ(a, x), ai)]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(std::move(sub));
  }
  return out;
}

BraceInvariants invariants(const SkewBrace& b, int p, int q) {
  const int n = b.n();
  BraceInvariants out;
  for (int a = 0; a < n; ++a) {
    bool trivial = true;
    for (int x = 0; x < n && trivial; ++x) trivial = b.lambda(a, x) == x;
    if (trivial) out.kernel.push_back(a);
  }
  out.ker_size = static_cast<int>(out.kernel.size());
  for (int a = 0; a < n; ++a) {
    bool fixed = true;
    for (int c = 0; c < n && fixed; ++c) fixed = b.lambda(c, a) == a;
    if (fixed) out.fix.push_back(a);
  }
  if (n == p * p * q) out.mul_label = identify_p2q(*b.circ_group(), p, q);
  out.biskew = is_biskew(b);
  auto ids = ideals(b);
  for (std::size_t i = 0; i < ids.size() && !out.direct_product; ++i) {
    const auto& I = ids[i];
    if (I.size() == 1 || static_cast<int>(I.size()) == n) continue;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const auto& J = ids[j];
      if (I.size() * J.size() != static_cast<std::size_t>(n)) continue;
      std::vector<int> meet;
      std::set_intersection(I.begin(), I.end(), J.begin(), J.end(),
                            std::back_inserter(meet));
      if (meet.size() == 1) {
        out.direct_product = std::make_pair(I, J);
        break;
      }
    }
  }
  return out;
}

std::optional<std::vector<int>> brace_isomorphic(const SkewBrace& b1,
                                                 const SkewBrace& b2) {
  if (b1.n() != b2.n()) return std::nullopt;
  auto c1 = b1.circ_group();
  auto circ_gens = c1->generators();
  std::optional<std::vector<int>> found;
  for_each_isomorphism(b1.add_group(), b2.add_group(),
                       [&](const std::vector<int>& phi) {
                         for (int a = 0; a < b1.n(); ++a) {
                           for (int s : circ_gens) {
                             if (phi[b1.circ(a, s)] != b2.circ(phi[a], phi[s])) {
                               return true;
                             }
                           }
                         }
                         found = phi;
                         return false;
                       });
  return found;
}

}  // namespace skewbrace
