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


#include "skewbrace/catalog.hpp"

#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <set>

#include "skewbrace/errors.hpp"
#include "skewbrace/expr.hpp"
#include "skewbrace/families.hpp"
#include "skewbrace/pipeline.hpp"

namespace skewbrace {
namespace {

// Lazily computed holomorphs and stratified runs for one (p, q).
class Runs {
 public:
  struct Hol {
    StructuredAutPtr saut;
    std::shared_ptr<const Holomorph> hol;
  };

  explicit Runs(int p, int q) : fp_(derive_params(p, q)) {}
  const FamilyParams& params() const { return fp_; }
  // Group and holomorph only, without enumerating.
  const Hol& holomorph(const GroupLabel& l) {
    auto it = hols_.find(l);
    if (it == hols_.end()) {
      auto s = structured_aut(build_group(l, fp_), fp_);
      it = hols_.emplace(l, Hol{s, std::make_shared<const Holomorph>(s->group(), s->auts())})
               .first;
    }
    return it->second;
  }
  const AdditiveRun& operator()(const GroupLabel& l) {
    auto it = runs_.find(l);
    if (it == runs_.end()) {
      auto g = build_group(l, fp_);
      it = runs_.emplace(l, std::make_unique<AdditiveRun>(
                                run_additive(g, fp_, Strategy::kStratified))).first;
    }
    return *it->second;
  }
  RunProvider provider() {
    return [this](const GroupLabel& l) -> const AdditiveRun& { return (*this)(l); };
  }

 private:
  FamilyParams fp_;
  std::map<GroupLabel, std::unique_ptr<AdditiveRun>> runs_;
  std::map<GroupLabel, Hol> hols_;
};

// Shared across tests; the order 147 runs take several seconds each.
Runs& runs_for(int p, int q) {
  static std::map<std::pair<int, int>, std::unique_ptr<Runs>> all;
  auto& slot = all[{p, q}];
  if (!slot) slot = std::make_unique<Runs>(p, q);
  return *slot;
}

const Catalog& catalog() {
  static const Catalog c = load_catalog(default_catalog_path());
  return c;
}

const Witness& witness(const std::string& lemma, const std::string& id) {
  for (const auto& w : catalog().witnesses) {
    if (w.lemma == lemma && w.id == id) return w;
  }
  throw std::runtime_error("no witness " + id);
}

WitnessInstance instance(Runs& runs, const Witness& w,
                         const std::map<std::string, std::int64_t>& b) {
  const auto& h = runs.holomorph(GroupLabel::parse(w.additive));
  return evaluate_instance(w, runs.params(), *h.saut, *h.hol, b);
}

GroupLabel class_of(Runs& runs, const Witness& w, const WitnessInstance& inst) {
  const auto& h = runs.holomorph(GroupLabel::parse(w.additive));
  const auto& p = runs.params();
  return summarize(*h.hol, inst.subgroup, p.p, p.q).mul_label;
}

TEST(Catalog, DefaultFileLoads) {
  EXPECT_EQ(catalog().version, kCatalogVersion);
  EXPECT_EQ(catalog().witnesses.size(), 42u);
  EXPECT_EQ(catalog().empty.size(), 7u);
}

TEST(Catalog, MalformedDocumentsAreRejected) {
  EXPECT_THROW(parse_catalog("not json"), DomainError);
  EXPECT_THROW(parse_catalog("{}"), DomainError);
  EXPECT_THROW(parse_catalog(R"({"version": 99, "witnesses": [], "empty_strata": []})"),
               DomainError);
  EXPECT_THROW(parse_catalog(R"({"version": 1, "witnesses": [{"id": "x"}], "empty_strata": []})"),
               DomainError);
}

TEST(Catalog, MetacyclicQStratumWitnessKeepsTheAdditiveClass) {
  Runs& runs = runs_for(7, 3);
  const auto& w = witness("p2s.pi2_q", "p2s.g_s");
  auto inst = instance(runs, w, {{"s", 1}});
  EXPECT_TRUE(is_regular(*runs.holomorph(GroupLabel{Family::P2SemidirectQ}).hol, inst.subgroup));
  EXPECT_EQ(inst.expected_class, GroupLabel{Family::P2SemidirectQ});
  EXPECT_EQ(class_of(runs, w, inst), GroupLabel{Family::P2SemidirectQ});
}

TEST(Catalog, GFWitnessWithCMinusOne) {
  Runs& runs = runs_for(5, 3);
  const auto& w = witness("gf.pi2_p2q", "gf.g_c");
  auto inst = instance(runs, w, {{"c", 2}});
  EXPECT_TRUE(is_regular(*runs.holomorph(GroupLabel{Family::GF}).hol, inst.subgroup));
  EXPECT_EQ(class_of(runs, w, inst), GroupLabel{Family::GF});
}

TEST(Catalog, OrdPWitnessAtTwenty) {
  Runs& runs = runs_for(2, 5);
  const auto& w = witness("ordp.pi2_p", "ordp.g_a");
  auto inst = instance(runs, w, {{"a", 1}});
  EXPECT_EQ(class_of(runs, w, inst), GroupLabel{Family::PxQbyP});
}

TEST(Catalog, QStratumCountAt147) {
  Runs& runs = runs_for(7, 3);
  auto rep = verify_lemma(catalog(), "p2s.pi2_q", runs.params(), runs.provider());
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.expected, 2);
  EXPECT_EQ(rep.instances, 2u);
  EXPECT_EQ(rep.stratum_orbits, 2u);
}

TEST(Catalog, PsiLevelWitnessesAt75) {
  Runs& runs = runs_for(5, 3);
  auto rep = verify_lemma(catalog(), "gf.pi2_p2q", runs.params(), runs.provider());
  EXPECT_TRUE(rep.ok);
  const auto& w = witness("gf.pi2_p2q", "gf.h_a");
  const auto& run = runs(GroupLabel{Family::GF});
  auto insts = evaluate_witness(w, runs.params(), *run.saut, *run.hol);
  EXPECT_EQ(insts.size(), 4u);
  std::set<int> orbits;
  for (const auto& i : insts) orbits.insert(run.orbit_of(i.subgroup));
  EXPECT_EQ(orbits.size(), 4u);
  EXPECT_FALSE(orbits.count(-1));
}

// The psi-level witness built from any vector v lands in the orbit fixed by
// psi(v) alone.
TEST(Catalog, PsiLevelOrbitDependsOnlyOnPsi) {
  Runs& runs = runs_for(5, 3);
  const auto& fp = runs.params();
  const auto& run = runs(GroupLabel{Family::GF});
  Witness w = witness("gf.pi2_p2q", "gf.h_a");
  w.params = {{"x", "0", "p-1"}, {"y", "0", "p-1"}};
  w.let.front() = {"v", "vec(x, y)", ""};
  std::map<std::int64_t, int> orbit_of_level;
  int scanned = 0;
  for (std::int64_t x = 0; x < 5; ++x) {
    for (std::int64_t y = 0; y < 5; ++y) {
      std::int64_t a = psi({x, y}, 5, *fp.xi);
      if (a == 0) continue;
      auto inst = evaluate_instance(w, fp, *run.saut, *run.hol, {{"x", x}, {"y", y}});
      ASSERT_TRUE(is_regular(*run.hol, inst.subgroup)) << x << "," << y;
      int o = run.orbit_of(inst.subgroup);
      ASSERT_GE(o, 0);
      auto [it, fresh] = orbit_of_level.emplace(a, o);
      EXPECT_EQ(it->second, o) << "v=(" << x << "," << y << ")";
      ++scanned;
    }
  }
  EXPECT_EQ(orbit_of_level.size(), 4u);
  std::set<int> distinct;
  for (const auto& [a, o] : orbit_of_level) distinct.insert(o);
  EXPECT_EQ(distinct.size(), 4u);
  EXPECT_GT(scanned, 4);
}

TEST(Catalog, EmptyStrataAt63) {
  Runs& runs = runs_for(3, 7);
  auto reports = verify_catalog(catalog(), runs.params(), runs.provider());
  int empty = 0;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.ok) << r.lemma;
    if (r.lemma == "ordp.pi2_p2" || r.lemma == "ordp.pi2_p2q") {
      EXPECT_EQ(r.stratum_orbits, 0u);
      EXPECT_EQ(r.expected, 0);
      ++empty;
    }
  }
  EXPECT_EQ(empty, 2);
}

TEST(Catalog, UndefinedExponentIsAConstraintError) {
  Runs& runs = runs_for(7, 3);
  Witness w = witness("p2s.pi2_q", "p2s.g_s");
  w.generators.front().word = "sigma^(1/p)";
  EXPECT_THROW(instance(runs, w, {{"s", 1}}), ConstraintError);
}

TEST(Catalog, NonGeneratingWitnessIsAConsistencyError) {
  Runs& runs = runs_for(7, 3);
  Witness w = witness("p2s.pi2_q", "p2s.g_s");
  w.generators.resize(1);
  EXPECT_THROW(instance(runs, w, {{"s", 1}}), ConsistencyError);
}

TEST(Catalog, WrongCountIsReported) {
  Runs& runs = runs_for(2, 7);
  Catalog c = catalog();
  for (auto& w : c.witnesses) {
    if (w.lemma == "pxq.pi2_pq" && w.id == "pxq.k1") w.count = "2";
  }
  auto rep = verify_lemma(c, "pxq.pi2_pq", runs.params(), runs.provider());
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.problems.empty());
}

TEST(Catalog, DuplicatedWitnessIsReportedAsConjugate) {
  Runs& runs = runs_for(2, 7);
  Catalog c = catalog();
  for (const auto& w : catalog().witnesses) {
    if (w.lemma == "pxq.pi2_pq" && w.id == "pxq.k1") {
      Witness dup = w;
      dup.id = "pxq.k1_copy";
      c.witnesses.push_back(dup);
    }
  }
  auto rep = verify_lemma(c, "pxq.pi2_pq", runs.params(), runs.provider());
  EXPECT_FALSE(rep.ok);
}

TEST(Catalog, RegimesSelectLemmas) {
  auto at63 = applicable_lemmas(catalog(), derive_params(3, 7));
  EXPECT_NE(std::find(at63.begin(), at63.end(), "pxq.pi2_pq"), at63.end());
  EXPECT_EQ(std::find(at63.begin(), at63.end(), "gf.pi2_q"), at63.end());
  EXPECT_TRUE(regime_holds({"p_minus_one_mod_q"}, derive_params(5, 3)));
  EXPECT_FALSE(regime_holds({"q_one_mod_p2"}, derive_params(3, 7)));
}

}  // namespace
}  // namespace skewbrace
