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


#include "skewbrace/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "skewbrace/errors.hpp"
#include "skewbrace/families.hpp"

namespace skewbrace {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("skewbrace_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const ClassificationReport& report(int p, int q) {
  static std::map<std::pair<int, int>, ClassificationReport> cache;
  auto it = cache.find({p, q});
  if (it == cache.end()) it = cache.emplace(std::pair{p, q}, classify(p, q).report).first;
  return it->second;
}

const ExpectedTables& expected() {
  static const ExpectedTables t = load_expected(default_expected_path());
  return t;
}

TEST(Report, Order20Totals) {
  const auto& r = report(2, 5);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.A, 11);
  EXPECT_EQ(r.B, 32);
  EXPECT_EQ(r.s, 43);
}

TEST(Report, Order12MatchesTheKnownCount) {
  // 38 skew braces of order 12, from published enumerations of small orders.
  const auto& r = report(2, 3);
  EXPECT_EQ(r.s, 38);
  auto c = conjecture(r);
  EXPECT_EQ(c.s_computed, 38);
  EXPECT_FALSE(c.s_formula.has_value());
  EXPECT_FALSE(c.match);
}

TEST(Report, ConjectureAtTwentyAndTwentyEight) {
  auto c20 = conjecture(report(2, 5));
  EXPECT_EQ(c20.s_computed, 43);
  EXPECT_EQ(c20.s_formula, 43);
  EXPECT_TRUE(c20.match);
  auto c28 = conjecture(report(2, 7));
  EXPECT_EQ(c28.s_computed, 29);
  EXPECT_EQ(c28.s_formula, 29);
  EXPECT_TRUE(c28.match);
}

TEST(Report, ClosedFormTotals) {
  auto t = closed_form_totals(3, 7);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->A, 11);
  EXPECT_EQ(t->B, 36);
  EXPECT_EQ(t->s, 47);
  t = closed_form_totals(2, 13);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->s, 43);
  EXPECT_FALSE(closed_form_totals(2, 3).has_value());
  EXPECT_FALSE(closed_form_totals(7, 3).has_value());
}

TEST(Report, TablesVerifyAtTwentyAndTwentyEight) {
  for (auto [p, q] : {std::pair{2, 5}, {2, 7}}) {
    auto check = verify_tables(report(p, q), expected());
    EXPECT_TRUE(check.ok()) << p << "," << q;
    EXPECT_GT(check.checked, 20u);
  }
}

TEST(Report, TamperedCellIsDetected) {
  auto r = report(2, 7);
  CellKey key{GroupLabel{Family::QbyP2_ordP}, GroupLabel{Family::PxQbyP}, 1};
  ASSERT_EQ(r.cells.count(key), 1u);
  r.cells[key] += 1;
  auto check = verify_tables(r, expected());
  EXPECT_FALSE(check.ok());
  ASSERT_FALSE(check.diffs.empty());
}

TEST(Report, JsonRoundTrip) {
  const auto& r = report(2, 5);
  auto text = export_report(r, Format::kJson);
  EXPECT_EQ(import_report(text), r);
  EXPECT_EQ(export_report(import_report(text), Format::kJson), text);
  EXPECT_EQ(text.find("seconds"), std::string::npos);
  EXPECT_NE(export_report(r, Format::kJson, true).find("seconds"), std::string::npos);
}

TEST(Report, CsvLayout) {
  auto csv = export_report(report(2, 7), Format::kCsv);
  EXPECT_EQ(csv.rfind("kind,additive,multiplicative,ker,count\n", 0), 0u);
  EXPECT_NE(csv.find("cell,PxQbyP,PxQbyP,2,2\n"), std::string::npos);
  EXPECT_NE(csv.find("total,all,,,29"), std::string::npos);
}

TEST(Report, MarkdownMatchesGoldenFile) {
  auto md = export_report(report(2, 7), Format::kMd);
  EXPECT_EQ(md, slurp(std::string(SKEWBRACE_GOLDEN_DIR) + "/order28.md"));
  EXPECT_NE(md.find("| QbyP2_ordP | 2 | 2 | 2 | 4 |"), std::string::npos);
  EXPECT_NE(md.find("| PxQbyP | 2 | 2 | 2 | 4 |"), std::string::npos);
}

TEST(Report, FormatsParse) {
  EXPECT_EQ(parse_format("json"), Format::kJson);
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_EQ(parse_format("md"), Format::kMd);
  EXPECT_THROW(parse_format("xml"), DomainError);
}

TEST(Report, DisplayOrder) {
  int q = 7;
  std::vector<GroupLabel> want = {
      {Family::CyclicP2Q}, {Family::P2SemidirectQ}, {Family::QbyP2_ordP},
      {Family::QbyP2_ordP2}, {Family::PxPQ}, {Family::Gk, 0},
      {Family::Gk, 6}, {Family::Gk, 1}, {Family::Gk, 2}, {Family::GF},
      {Family::PxQbyP}};
  auto got = want;
  std::reverse(got.begin(), got.end());
  std::sort(got.begin(), got.end(),
            [q](const GroupLabel& a, const GroupLabel& b) { return label_less(a, b, q); });
  EXPECT_EQ(got, want);
}

TEST(Report, JobsDoNotChangeTheResult) {
  ClassifyOptions two;
  two.jobs = 2;
  EXPECT_EQ(classify(2, 13, two).report, classify(2, 13).report);
}

TEST(Report, CrossCheckedRunMatches) {
  ClassifyOptions both;
  both.cross_check = true;
  auto r = classify(2, 7, both).report;
  EXPECT_EQ(r.cells, report(2, 7).cells);
  EXPECT_EQ(r.strategy, "both");
}

TEST(Report, CachedRunMatchesFreshRun) {
  auto dir = scratch_dir("cache");
  ClassifyOptions opts;
  opts.cache_dir = dir.string();
  auto first = classify(2, 7, opts);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 4u);
  auto second = classify(2, 7, opts);
  EXPECT_EQ(second.report.cells, first.report.cells);
  EXPECT_EQ(second.report.cells, report(2, 7).cells);
  for (const auto& a : second.report.additive) EXPECT_EQ(a.strategy, "cache");
  fs::remove_all(dir);
}

TEST(Report, PoisonedCacheIsRejected) {
  auto dir = scratch_dir("poison");
  auto fp = derive_params(2, 5);
  ClassifyOptions opts;
  opts.only = GroupLabel{Family::PxQbyP};
  auto c = classify(2, 5, opts);
  const auto& run = *c.runs.at(GroupLabel{Family::PxQbyP});
  save_cache(dir.string(), run, fp);
  auto path = cache_file(dir.string(), fp, run.label);
  ASSERT_NO_THROW(import_cache(path, fp));
  auto doc = json::parse(slurp(path));

  // Moves one element off its fibre so that the subgroup is no longer regular.
  auto poisoned = doc;
  auto& rep = poisoned["orbits"].back()["rep"];
  ASSERT_GE(rep.size(), 2u);
  rep[1][0] = rep[0][0];
  write_file_atomic(path, poisoned.dump());
  EXPECT_THROW(import_cache(path, fp), CacheError);

  // A count that disagrees with the recomputed summaries.
  auto relabelled = doc;
  relabelled["orbits"].back()["pi2_size"] = 7;
  write_file_atomic(path, relabelled.dump());
  EXPECT_THROW(import_cache(path, fp), CacheError);

  auto wrong_params = doc;
  wrong_params["q"] = 7;
  write_file_atomic(path, wrong_params.dump());
  EXPECT_THROW(import_cache(path, fp), CacheError);

  write_file_atomic(path, "{");
  EXPECT_THROW(import_cache(path, fp), CacheError);

  // classify warns, recomputes and overwrites the bad file.
  opts.cache_dir = dir.string();
  auto again = classify(2, 5, opts);
  EXPECT_EQ(again.report.cells, c.report.cells);
  EXPECT_NO_THROW(import_cache(path, fp));
  fs::remove_all(dir);
}

TEST(Report, BudgetSkipsLargeHolomorphs) {
  ClassifyOptions opts;
  opts.max_hol_order = 500;
  auto r = classify(2, 5, opts).report;
  EXPECT_FALSE(r.complete);
  bool skipped = false;
  for (const auto& a : r.additive) skipped |= !a.complete && !a.error.empty();
  EXPECT_TRUE(skipped);
}

}  // namespace
}  // namespace skewbrace
