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


#include "skewbrace/ybe.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "skewbrace/families.hpp"
#include "skewbrace/pipeline.hpp"

namespace skewbrace {
namespace {

Solution flip(int n) {
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) r.emplace_back(y, x);
  }
  return Solution::from_map(n, r);
}

TEST(Ybe, FlipIsAnInvolutiveNondegenerateSolution) {
  auto s = flip(5);
  EXPECT_TRUE(check_ybe(s).ok);
  EXPECT_TRUE(check_nondegenerate(s));
  EXPECT_TRUE(check_involutive(s).ok);
}

TEST(Ybe, RandomPairBijectionFails) {
  const int n = 6;
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) r.emplace_back(x, y);
  }
  std::mt19937 rng(20260101);
  std::shuffle(r.begin(), r.end(), rng);
  auto check = check_ybe(Solution::from_map(n, r));
  EXPECT_FALSE(check.ok);
  EXPECT_TRUE(check.witness.has_value());
}

TEST(Ybe, ConstantLeftComponentIsDegenerate) {
  const int n = 4;
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) r.emplace_back(0, x);
  }
  EXPECT_FALSE(check_nondegenerate(Solution::from_map(n, r)));
}

TEST(Ybe, TrivialAbelianBraceGivesTheFlip) {
  auto fp = derive_params(2, 5);
  auto g = build_group(GroupLabel{Family::PxPQ}, fp);
  auto run = run_from_representatives(g, fp, {[&] {
    Holomorph hol(g, structured_aut(g, fp)->auts());
    HolSubgroup s;
    for (int a = 0; a < 20; ++a) s.elements.push_back(hol.pack(a, 0));
    return s;
  }()});
  auto sol = solution_from_brace(brace_from_regular(*run.hol, run.regulars.front()));
  EXPECT_EQ(sol.sigma, flip(20).sigma);
  EXPECT_EQ(sol.tau, flip(20).tau);
}

TEST(Ybe, TrivialBraceOnG0IsConjugation) {
  auto fp = derive_params(7, 3);
  auto g = build_group(GroupLabel{Family::Gk, 0}, fp);
  Holomorph hol(g, structured_aut(g, fp)->auts());
  HolSubgroup s;
  for (int a = 0; a < 147; ++a) s.elements.push_back(hol.pack(a, 0));
  auto sol = solution_from_brace(brace_from_regular(hol, s));
  for (int a = 0; a < 147; ++a) {
    for (int b = 0; b < 147; ++b) {
      ASSERT_EQ(sol.r(a, b), std::make_pair(b, g->mul(g->mul(g->inv(b), a), b)));
    }
  }
  EXPECT_TRUE(check_ybe(sol).ok);
  EXPECT_TRUE(check_nondegenerate(sol));
  auto inv = check_involutive(sol);
  EXPECT_FALSE(inv.ok);
  ASSERT_TRUE(inv.witness.has_value());
  int x = (*inv.witness)[0], y = (*inv.witness)[1];
  EXPECT_NE(g->mul(x, y), g->mul(y, x));
}

class BraceSolutions : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(BraceSolutions, SatisfyTheBraidRelation) {
  auto [p, q] = GetParam();
  auto fp = derive_params(p, q);
  for (const auto& g : all_groups(fp)) {
    auto run = run_additive(g, fp, Strategy::kStratified);
    for (const auto& o : run.partition.orbits) {
      auto sol = solution_from_brace(brace_from_regular(*run.hol, o.representative));
      ASSERT_TRUE(check_ybe(sol).ok) << run.label.to_string();
      ASSERT_TRUE(check_nondegenerate(sol));
      // Involutive exactly when the additive group is abelian.
      EXPECT_EQ(check_involutive(sol).ok, g->is_abelian()) << run.label.to_string();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, BraceSolutions,
                         ::testing::Values(std::pair{2, 5}, std::pair{2, 7}));

TEST(Ybe, ExportHasOneLinePerLeftArgument) {
  auto text = export_solution(flip(3));
  EXPECT_EQ(text, "0,0 1,0 2,0\n0,1 1,1 2,1\n0,2 1,2 2,2\n");
}

}  // namespace
}  // namespace skewbrace
