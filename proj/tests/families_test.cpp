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

#include <gtest/gtest.h>

#include <set>

#include "skewbrace/errors.hpp"
#include "skewbrace/modular.hpp"

namespace skewbrace {
namespace {

// Smallest x in [2, m) with x^k = 1 and no smaller positive power equal to 1.
std::optional<int> smallest_of_order(int k, int m) {
  for (int x = 2; x < m; ++x) {
    int y = 1, ord = 0;
    for (int e = 1; e <= m; ++e) {
      y = y * x % m;
      if (y == 1) {
        ord = e;
        break;
      }
    }
    if (ord == k) return x;
  }
  return std::nullopt;
}

std::vector<int> brute_center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::set<std::vector<int>> perm_set(const AutGroup& aut) {
  std::set<std::vector<int>> out;
  for (int f = 0; f < aut.size(); ++f) {
    auto s = aut.perm(f);
    out.emplace(s.begin(), s.end());
  }
  return out;
}

GroupPtr build(Family f, const FamilyParams& fp, int k = 0) {
  return build_group(GroupLabel{f, k}, fp);
}

TEST(DeriveParams, AgreesWithOrderScans) {
  auto fp = derive_params(2, 5);
  EXPECT_EQ(fp.h, 2);
  EXPECT_EQ(fp.r, 4);
  fp = derive_params(7, 3);
  EXPECT_EQ(fp.t, 18);
  EXPECT_EQ(fp.t, smallest_of_order(3, 49));
  EXPECT_EQ(fp.g, smallest_of_order(3, 7));
  fp = derive_params(3, 7);
  EXPECT_FALSE(fp.h.has_value());
  EXPECT_EQ(fp.r, 2);
  fp = derive_params(2, 13);
  EXPECT_EQ(fp.h, smallest_of_order(4, 13));
  EXPECT_EQ(fp.r, pow_mod(*fp.h, 2, 13));
}

TEST(DeriveParams, SecondChoiceIsTheNextValidValue) {
  auto fp = derive_params(3, 7, 1);
  EXPECT_EQ(fp.r, 4);
  fp = derive_params(2, 13, 1);
  EXPECT_EQ(fp.h, 8);
  EXPECT_EQ(fp.r, 12);
}

TEST(DeriveParams, GFMatrixHasOrderQ) {
  auto fp = derive_params(5, 3);
  ASSERT_TRUE(fp.F.has_value());
  EXPECT_EQ(order(*fp.F, 5), 3);
}

TEST(DeriveParams, RejectsBadPrimes) {
  EXPECT_THROW(derive_params(4, 3), DomainError);
  EXPECT_THROW(derive_params(3, 3), DomainError);
  EXPECT_THROW(derive_params(2, 1), DomainError);
}

TEST(Families, ClassCountsPerRegime) {
  EXPECT_EQ(all_groups(derive_params(3, 7)).size(), 4u);
  EXPECT_EQ(all_groups(derive_params(7, 3)).size(), 6u);
  EXPECT_EQ(all_groups(derive_params(2, 13)).size(), 5u);
  EXPECT_EQ(all_groups(derive_params(2, 7)).size(), 4u);
  EXPECT_EQ(all_groups(derive_params(5, 3)).size(), 3u);
  EXPECT_EQ(all_groups(derive_params(11, 5)).size(), 2u + 1u + 4u);
}

TEST(Families, BuiltGroupsHaveTheExpectedCenters) {
  auto g0 = build(Family::Gk, derive_params(7, 3), 0);
  EXPECT_EQ(g0->order(), 147);
  EXPECT_FALSE(g0->is_abelian());
  EXPECT_EQ(brute_center(*g0).size(), 7u);
  EXPECT_EQ(g0->center(), brute_center(*g0));

  auto gf = build(Family::GF, derive_params(5, 3));
  EXPECT_EQ(gf->order(), 75);
  EXPECT_EQ(brute_center(*gf).size(), 1u);

  auto z20 = build(Family::CyclicP2Q, derive_params(2, 5));
  int max_order = 0;
  for (int a = 0; a < 20; ++a) max_order = std::max(max_order, z20->element_order(a));
  EXPECT_EQ(max_order, 20);
}

TEST(Families, OrdPAndOrdP2DifferAtFiftyTwo) {
  auto fp = derive_params(2, 13);
  auto a = build(Family::QbyP2_ordP2, fp);
  auto b = build(Family::QbyP2_ordP, fp);
  EXPECT_EQ(brute_center(*a).size(), 1u);
  EXPECT_EQ(brute_center(*b).size(), 2u);
  EXPECT_EQ(identify_p2q(*a, 2, 13).family, Family::QbyP2_ordP2);
  EXPECT_EQ(identify_p2q(*b, 2, 13).family, Family::QbyP2_ordP);
}

TEST(Families, ParameterChoiceDoesNotChangeTheGroup) {
  for (Family f : {Family::QbyP2_ordP, Family::PxQbyP}) {
    auto a = build(f, derive_params(3, 7, 0));
    auto b = build(f, derive_params(3, 7, 1));
    EXPECT_NE(a->table(), b->table());
    EXPECT_TRUE(are_isomorphic(a, b).has_value()) << family_name(f);
  }
}

TEST(Families, GkIsIsomorphicToGkInverse) {
  auto fp = derive_params(11, 5);
  auto g2 = build(Family::Gk, fp, 2);
  auto g3 = build(Family::Gk, fp, 3);  // 2 * 3 = 1 mod 5
  EXPECT_NE(g2->table(), g3->table());
  EXPECT_TRUE(are_isomorphic(g2, g3).has_value());
}

TEST(Families, IdentificationSeparatesEveryClass) {
  for (auto [p, q] : {std::pair{7, 3}, {2, 13}, {3, 7}, {5, 3}}) {
    auto groups = all_groups(derive_params(p, q));
    std::set<GroupLabel> seen;
    for (const auto& g : groups) {
      ASSERT_TRUE(g->label().has_value());
      EXPECT_EQ(identify_p2q(*g, p, q), *g->label());
      seen.insert(*g->label());
    }
    EXPECT_EQ(seen.size(), groups.size());
  }
}

TEST(Families, DistinctLabelsAreNotIsomorphic) {
  auto groups = all_groups(derive_params(2, 13));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      EXPECT_FALSE(are_isomorphic(groups[i], groups[j]).has_value());
    }
  }
}

TEST(StructuredAut, KnownOrders) {
  EXPECT_EQ(structured_aut(build(Family::P2SemidirectQ, derive_params(7, 3)),
                           derive_params(7, 3))->auts()->size(), 2058);
  EXPECT_EQ(structured_aut(build(Family::QbyP2_ordP2, derive_params(2, 13)),
                           derive_params(2, 13))->auts()->size(), 156);
  EXPECT_EQ(structured_aut(build(Family::PxQbyP, derive_params(3, 7)),
                           derive_params(3, 7))->auts()->size(), 252);
  EXPECT_EQ(structured_aut(build(Family::GF, derive_params(5, 3)),
                           derive_params(5, 3))->auts()->size(), 1200);
  EXPECT_EQ(aut_order_formula(GroupLabel{Family::Gk, 1}, 7, 3), 98784);
}

TEST(StructuredAut, GkOneAtOrder147) {
  auto fp = derive_params(7, 3);
  auto s = structured_aut(build(Family::Gk, fp, 1), fp);
  EXPECT_EQ(s->auts()->size(), 98784);
}

TEST(StructuredAut, CoordinatesRoundTrip) {
  auto fp = derive_params(3, 7);
  auto s = structured_aut(build(Family::PxQbyP, fp), fp);
  for (int f = 0; f < s->auts()->size(); ++f) {
    ASSERT_EQ(s->index(s->coords(f)), f);
    auto m = s->morphism(s->coords(f));
    ASSERT_TRUE(m.is_homomorphism());
    ASSERT_TRUE(m.is_bijective());
  }
  EXPECT_EQ(s->index(std::vector<int>{0, 0, 0, 0}), -1);
}

// Every family of every order up to 100, against generator-image search.
TEST(StructuredAut, EqualsBruteForceUpToOrder100) {
  int checked = 0;
  for (int p : {2, 3, 5, 7}) {
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
      if (p == q || p * p * q > 100) continue;
      auto fp = derive_params(p, q);
      for (const auto& g : all_groups(fp)) {
        auto s = structured_aut(g, fp);
        auto brute = compute_automorphisms(g);
        EXPECT_EQ(perm_set(*s->auts()), perm_set(*brute))
            << g->label()->to_string() << " p=" << p << " q=" << q;
        EXPECT_EQ(s->auts()->size(), aut_order_formula(*g->label(), p, q));
        ++checked;
      }
    }
  }
  // Fifteen orders p^2 q <= 100 carry 62 isomorphism classes in total.
  EXPECT_EQ(checked, 62);
}

}  // namespace
}  // namespace skewbrace
