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


// Whole-order classification, expected-value tables, closed-form totals,
// serialization and the on-disk orbit cache.

#ifndef SKEWBRACE_REPORT_HPP_
#define SKEWBRACE_REPORT_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewbrace/enumerate.hpp"
#include "skewbrace/families.hpp"
#include "skewbrace/pipeline.hpp"

namespace skewbrace {

inline constexpr int kReportVersion = 1;
inline constexpr int kCacheVersion = 1;
inline constexpr const char* kArtifactVersion = "skewbrace-1.0.0";

// Display order used by every table: cyclic, the semidirect families with
// cyclic Sylow p-subgroup, then the elementary abelian Sylow families.
int label_rank(const GroupLabel& label, int q);
bool label_less(const GroupLabel& a, const GroupLabel& b, int q);

struct CellKey {
  GroupLabel additive;
  GroupLabel mul;
  int ker = 0;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct AdditiveSummary {
  GroupLabel label;
  bool abelian = false;
  std::int64_t aut_order = 0;
  std::size_t regular_subgroups = 0;
  std::size_t orbits = 0;
  std::string strategy;  // dfs, stratified, both or cache
  bool complete = true;
  std::string error;
  friend bool operator==(const AdditiveSummary&, const AdditiveSummary&) = default;
};

struct ClassificationReport {
  int p = 0;
  int q = 0;
  std::string regime;
  FamilyParams params;
  std::string strategy;
  std::vector<AdditiveSummary> additive;  // display order
  std::map<CellKey, int> cells;           // orbit counts
  std::int64_t A = 0;                     // abelian additive group
  std::int64_t B = 0;                     // nonabelian additive group
  std::int64_t s = 0;
  bool complete = true;
  // Wall-clock seconds per additive group; not part of equality.
  std::map<std::string, double> seconds;

  friend bool operator==(const ClassificationReport& x,
                         const ClassificationReport& y) {
    return x.p == y.p && x.q == y.q && x.regime == y.regime &&
           x.params == y.params && x.strategy == y.strategy &&
           x.additive == y.additive && x.cells == y.cells && x.A == y.A &&
           x.B == y.B && x.s == y.s && x.complete == y.complete;
  }
};

struct ClassifyOptions {
  Strategy strategy = Strategy::kStratified;
  // Run both strategies and fail on any difference.
  bool cross_check = false;
  // Use DFS when the stratified search declines the Aut(A) size.
  bool fallback_dfs = true;
  int jobs = 1;
  int choice = 0;  // derive_params choice
  std::optional<GroupLabel> only;
  std::string cache_dir;
  // Additive groups whose holomorph is larger are skipped and the report
  // is flagged incomplete. Zero disables the limit.
  std::int64_t max_hol_order = 2'000'000;
  EnumerateOptions enumerate;
};

struct Classification {
  ClassificationReport report;
  std::map<GroupLabel, std::shared_ptr<const AdditiveRun>> runs;
};

// Throws DomainError unless p, q are distinct primes. Per-group failures
// other than budget limits propagate.
Classification classify(int p, int q, const ClassifyOptions& opts = {});

// Builds the report from finished runs (in any order).
ClassificationReport assemble_report(
    const FamilyParams& params,
    const std::vector<std::shared_ptr<const AdditiveRun>>& runs,
    std::vector<AdditiveSummary> skipped = {});

// --- expected values -------------------------------------------------------

struct ExpectedValue {
  std::string anchor;
  std::string formula;
  std::int64_t value = 0;
  GroupLabel additive;
  std::optional<GroupLabel> mul;  // absent: additive total
  std::optional<int> ker;         // absent: summed over ker
};

struct ExpectedTables {
  std::string json;  // raw document, evaluated per (p, q)
};

ExpectedTables load_expected(const std::string& path);
std::string default_expected_path();

// In-regime cells at (p, q), evaluated.
std::vector<ExpectedValue> expected_values(const ExpectedTables& t,
                                           const FamilyParams& params);

struct Totals {
  std::int64_t A = 0, B = 0, s = 0;
};

// Closed forms for the total counts, where known.
std::optional<Totals> closed_form_totals(int p, int q);

struct TableDiff {
  std::string anchor;
  std::int64_t expected = 0;
  std::optional<std::int64_t> got;  // absent when the group was skipped
};

struct TableCheck {
  std::size_t checked = 0;
  std::vector<TableDiff> diffs;
  bool ok() const { return diffs.empty(); }
};

// Every in-regime expected value plus row/column consistency and the
// closed-form totals.
TableCheck verify_tables(const ClassificationReport& r, const ExpectedTables& t);

struct ConjectureResult {
  std::int64_t s_computed = 0;
  std::optional<std::int64_t> s_formula;
  bool match = false;  // false when the formula is absent
};

ConjectureResult conjecture(const ClassificationReport& r);

// --- serialization ---------------------------------------------------------

enum class Format { kJson, kCsv, kMd };
Format parse_format(std::string_view s);

// Deterministic. Timing is included only on request.
std::string export_report(const ClassificationReport& r, Format f,
                          bool timing = false);
// Inverse of the JSON export; throws DomainError.
ClassificationReport import_report(std::string_view json_text);

// Writes via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

// --- orbit cache -------------------------------------------------------------

std::string cache_file(const std::string& dir, const FamilyParams& params,
                       const GroupLabel& label);
void save_cache(const std::string& dir, const AdditiveRun& run,
                const FamilyParams& params);
// Rebuilds the run from the cached representatives after revalidating
// every one of them; throws CacheError on version or parameter mismatch,
// corrupt content or failed revalidation.
AdditiveRun import_cache(const std::string& path, const FamilyParams& params);

}  // namespace skewbrace

#endif  // SKEWBRACE_REPORT_HPP_
