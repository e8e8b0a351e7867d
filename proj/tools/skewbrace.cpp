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


// Command-line front end. Exit codes: 0 full match, 1 any diff or failed
// check, 2 usage or budget errors.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "skewbrace/braces.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/report.hpp"
#include "skewbrace/ybe.hpp"

namespace sb = skewbrace;

namespace {

constexpr int kOk = 0;
constexpr int kDiff = 1;
constexpr int kUsage = 2;

struct Common {
  int p = 0;
  int q = 0;
  int jobs = 1;
  int choice = 0;
  std::string budget = "normal";
  std::string cache;
  std::string strategy = "stratified";
};

void add_common(CLI::App* cmd, Common& c, bool with_strategy = true) {
  cmd->add_option("--p", c.p, "prime p")->required();
  cmd->add_option("--q", c.q, "prime q")->required();
  cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--choice", c.choice,
                  "use the (N+1)-th smallest valid family parameters")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--budget", c.budget, "normal or large")
      ->check(CLI::IsMember({"normal", "large"}));
  cmd->add_option("--cache", c.cache, "orbit cache directory");
  if (with_strategy) {
    cmd->add_option("--strategy", c.strategy, "dfs, stratified or both")
        ->check(CLI::IsMember({"dfs", "stratified", "both"}));
  }
}

sb::ClassifyOptions options(const Common& c) {
  sb::ClassifyOptions o;
  o.jobs = c.jobs;
  o.choice = c.choice;
  o.cache_dir = c.cache;
  if (c.budget == "large") {
    o.max_hol_order = 0;
    o.enumerate.max_order = 1 << 20;
  }
  if (c.strategy == "both") {
    o.cross_check = true;
  } else {
    o.strategy = sb::parse_strategy(c.strategy);
  }
  return o;
}

void print_incomplete(const sb::ClassificationReport& r) {
  for (const auto& s : r.additive) {
    if (!s.complete) std::cerr << "incomplete: " << s.label.to_string() << ": " << s.error << "\n";
  }
}

int cmd_enumerate(const Common& c, const std::string& additive,
                  const std::string& format, const std::string& out, bool timing) {
  auto opts = options(c);
  if (!additive.empty()) opts.only = sb::GroupLabel::parse(additive);
  auto result = sb::classify(c.p, c.q, opts);
  std::string text = sb::export_report(result.report, sb::parse_format(format), timing);
  if (out.empty()) {
    std::cout << text;
  } else {
    sb::write_file_atomic(out, text);
  }
  if (!result.report.complete) {
    print_incomplete(result.report);
    return kUsage;
  }
  return kOk;
}

int cmd_verify_tables(const Common& c) {
  auto result = sb::classify(c.p, c.q, options(c));
  auto tables = sb::load_expected(sb::default_expected_path());
  auto check = sb::verify_tables(result.report, tables);
  for (const auto& d : check.diffs) {
    std::cout << "DIFF " << d.anchor << ": expected " << d.expected << ", got "
              << (d.got ? std::to_string(*d.got) : std::string("n/a")) << "\n";
  }
  std::cout << (check.ok() ? "PASS" : "FAIL") << " verify-tables p=" << c.p << " q=" << c.q
            << ": " << check.checked << " values checked, " << check.diffs.size()
            << " diffs\n";
  if (!result.report.complete) {
    print_incomplete(result.report);
    return kUsage;
  }
  return check.ok() ? kOk : kDiff;
}

int cmd_conjecture(const Common& c) {
  auto result = sb::classify(c.p, c.q, options(c));
  auto cj = sb::conjecture(result.report);
  std::cout << "s_computed " << cj.s_computed << "\n";
  std::cout << "s_formula " << (cj.s_formula ? std::to_string(*cj.s_formula) : "absent") << "\n";
  std::cout << "match " << (cj.match ? "true" : "false") << "\n";
  if (!result.report.complete) {
    print_incomplete(result.report);
    return kUsage;
  }
  return !cj.s_formula || cj.match ? kOk : kDiff;
}

int cmd_solutions(const Common& c, const std::string& additive, int orbit, bool check,
                  const std::string& out) {
  auto opts = options(c);
  opts.only = sb::GroupLabel::parse(additive);
  auto result = sb::classify(c.p, c.q, opts);
  if (!result.report.complete) {
    print_incomplete(result.report);
    return kUsage;
  }
  const auto& run = *result.runs.begin()->second;
  if (orbit < 0 || orbit >= static_cast<int>(run.partition.orbits.size())) {
    std::cerr << "orbit index out of range (0.." << run.partition.orbits.size() - 1 << ")\n";
    return kUsage;
  }
  auto brace = sb::brace_from_regular(*run.hol, run.partition.orbits[orbit].representative);
  auto sol = sb::solution_from_brace(brace);
  std::string text = sb::export_solution(sol);
  if (out.empty()) {
    std::cout << text;
  } else {
    sb::write_file_atomic(out, text);
  }
  if (!check) return kOk;
  auto ybe = sb::check_ybe(sol);
  bool nondeg = sb::check_nondegenerate(sol);
  bool involutive = sb::check_involutive(sol).ok;
  std::cerr << "ybe " << (ybe.ok ? "ok" : "FAIL") << "\nnondegenerate "
            << (nondeg ? "ok" : "FAIL") << "\ninvolutive " << (involutive ? "yes" : "no")
            << "\n";
  return ybe.ok && nondeg ? kOk : kDiff;
}

int cmd_catalog(const Common& c, const std::string& lemma, const std::string& path) {
  auto opts = options(c);
  auto params = sb::derive_params(c.p, c.q, c.choice);
  auto catalog = sb::load_catalog(path.empty() ? sb::default_catalog_path() : path);
  std::map<sb::GroupLabel, std::shared_ptr<const sb::AdditiveRun>> runs;
  sb::RunProvider provider = [&](const sb::GroupLabel& label) -> const sb::AdditiveRun& {
    auto it = runs.find(label);
    if (it == runs.end()) {
      auto o = opts;
      o.only = label;
      auto result = sb::classify(c.p, c.q, o);
      if (!result.report.complete) {
        throw sb::SizeError("additive group " + label.to_string() + " exceeds the budget");
      }
      it = runs.emplace(label, result.runs.at(label)).first;
    }
    return *it->second;
  };
  std::vector<sb::LemmaReport> reports;
  if (lemma.empty()) {
    reports = sb::verify_catalog(catalog, params, provider);
  } else {
    reports.push_back(sb::verify_lemma(catalog, lemma, params, provider));
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.lemma << " additive=" << r.additive
              << " pi2=" << r.pi2 << " expected=" << r.expected
              << " witnesses=" << r.instances << " orbits=" << r.stratum_orbits << "\n";
    for (const auto& pr : r.problems) std::cout << "  " << pr << "\n";
    ok = ok && r.ok;
  }
  if (reports.empty()) std::cout << "no catalog entries apply at p=" << c.p << " q=" << c.q << "\n";
  return ok ? kOk : kDiff;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew braces of order p^2 q: enumeration and verification"};
  app.require_subcommand(1);

  Common c;
  std::string additive, format = "json", out, lemma, catalog_path;
  bool timing = false, check = false;
  int orbit = -1;

  auto* en = app.add_subcommand("enumerate", "classify all skew braces of order p^2 q");
  add_common(en, c);
  en->add_option("--additive", additive, "restrict to one additive group");
  en->add_option("--format", format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  en->add_option("--out", out, "output file (default stdout)");
  en->add_flag("--timing", timing, "include wall-clock seconds in JSON");

  auto* vt = app.add_subcommand("verify-tables", "compare against the expected tables");
  add_common(vt, c);

  auto* cj = app.add_subcommand("conjecture", "compare totals with the closed form");
  add_common(cj, c);

  auto* so = app.add_subcommand("solutions", "export the YBE solution of one orbit");
  add_common(so, c);
  so->add_option("--additive", additive, "additive group label")->required();
  so->add_option("--orbit", orbit, "orbit index")->required();
  so->add_flag("--check", check, "verify YBE and non-degeneracy");
  so->add_option("--out", out, "output file (default stdout)");

  auto* ca = app.add_subcommand("catalog", "verify the witness catalog");
  add_common(ca, c);
  ca->add_option("--lemma", lemma, "verify one lemma id");
  ca->add_option("--catalog", catalog_path, "witness file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return cmd_enumerate(c, additive, format, out, timing);
    if (*vt) return cmd_verify_tables(c);
    if (*cj) return cmd_conjecture(c);
    if (*so) return cmd_solutions(c, additive, orbit, check, out);
    if (*ca) return cmd_catalog(c, lemma, catalog_path);
  } catch (const sb::SizeError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kUsage;
  } catch (const sb::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiff;
  }
  return kUsage;
}
