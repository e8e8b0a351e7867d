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

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "skewbrace/errors.hpp"
#include "skewbrace/expr.hpp"
#include "skewbrace/modular.hpp"

#ifndef SKEWBRACE_DATA_DIR
#define SKEWBRACE_DATA_DIR "data"
#endif

namespace skewbrace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

template <class F>
void for_each_parallel(int jobs, std::size_t count, F&& body) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ojson params_to_json(const FamilyParams& fp) {
  auto opt = [](const std::optional<int>& v) { return v ? ojson(*v) : ojson(nullptr); };
  ojson j;
  j["p"] = fp.p;
  j["q"] = fp.q;
  j["t"] = opt(fp.t);
  j["g"] = opt(fp.g);
  j["r"] = opt(fp.r);
  j["h"] = opt(fp.h);
  j["xi"] = opt(fp.xi);
  j["F"] = fp.F ? ojson::array({fp.F->a, fp.F->b, fp.F->c, fp.F->d}) : ojson(nullptr);
  return j;
}

FamilyParams params_from_json(const json& j) {
  auto opt = [&](const char* k) -> std::optional<int> {
    if (!j.contains(k) || j.at(k).is_null()) return std::nullopt;
    return j.at(k).get<int>();
  };
  FamilyParams fp;
  fp.p = j.at("p").get<int>();
  fp.q = j.at("q").get<int>();
  fp.t = opt("t");
  fp.g = opt("g");
  fp.r = opt("r");
  fp.h = opt("h");
  fp.xi = opt("xi");
  if (j.contains("F") && !j.at("F").is_null()) {
    auto v = j.at("F").get<std::vector<std::int64_t>>();
    if (v.size() != 4) throw DomainError("F needs four entries");
    fp.F = Mat2{v[0], v[1], v[2], v[3]};
  }
  return fp;
}

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string params_hash(const FamilyParams& fp) {
  return fnv1a_hex(std::string(kArtifactVersion) + "|" + fp.to_string());
}

// Accepts "Gk(<expr>)" with the exponent evaluated and canonicalized.
GroupLabel resolve_label(const std::string& text, const ExprContext& ctx,
                         int q) {
  if (text.rfind("Gk(", 0) == 0 && text.back() == ')') {
    std::int64_t k = evaluate_int(text.substr(3, text.size() - 4), ctx);
    return {Family::Gk, canonical_k(static_cast<int>(mod(k, q)), q)};
  }
  return GroupLabel::parse(text);
}

ExprContext table_context(const FamilyParams& fp) {
  ExprContext ctx;
  ctx.p = fp.p;
  ctx.vars["p"] = std::int64_t{fp.p};
  ctx.vars["q"] = std::int64_t{fp.q};
  Regime reg = regime_of(fp.p, fp.q);
  ctx.vars["p_one_mod_q"] = std::int64_t{reg.p_one_mod_q};
  ctx.vars["p_minus_one_mod_q"] = std::int64_t{reg.p_minus_one_mod_q};
  ctx.vars["q_one_mod_p"] = std::int64_t{reg.q_one_mod_p};
  ctx.vars["q_one_mod_p2"] = std::int64_t{reg.q_one_mod_p2};
  return ctx;
}

}  // namespace

int label_rank(const GroupLabel& label, int q) {
  switch (label.family) {
    case Family::CyclicP2Q: return 0;
    case Family::P2SemidirectQ: return 1;
    case Family::QbyP2_ordP: return 2;
    case Family::QbyP2_ordP2: return 3;
    case Family::PxPQ: return 4;
    case Family::Gk:
      if (label.k == 0) return 10;
      if (label.k == q - 1) return 11;
      if (label.k == 1) return 12;
      return 13 + label.k;
    case Family::GF: return 1 << 20;
    case Family::PxQbyP: return (1 << 20) + 1;
  }
  return 1 << 21;
}

bool label_less(const GroupLabel& a, const GroupLabel& b, int q) {
  return label_rank(a, q) < label_rank(b, q);
}

ClassificationReport assemble_report(
    const FamilyParams& params,
    const std::vector<std::shared_ptr<const AdditiveRun>>& runs,
    std::vector<AdditiveSummary> skipped) {
  ClassificationReport r;
  r.p = params.p;
  r.q = params.q;
  r.regime = regime_of(params.p, params.q).tag();
  r.params = params;
  for (const auto& run : runs) {
    AdditiveSummary s;
    s.label = run->label;
    s.abelian = run->group->is_abelian();
    s.aut_order = run->hol->auts().size();
    s.regular_subgroups = run->regulars.size();
    s.orbits = run->partition.orbits.size();
    s.strategy = run->origin;
    for (const auto& o : run->summaries) {
      ++r.cells[{run->label, o.mul_label, o.ker_size}];
    }
    (s.abelian ? r.A : r.B) += static_cast<std::int64_t>(s.orbits);
    r.seconds[run->label.to_string()] = run->seconds;
    r.additive.push_back(std::move(s));
  }
  for (auto& s : skipped) {
    r.complete = false;
    r.additive.push_back(std::move(s));
  }
  std::sort(r.additive.begin(), r.additive.end(),
            [&](const AdditiveSummary& a, const AdditiveSummary& b) {
              return label_less(a.label, b.label, params.q);
            });
  r.s = r.A + r.B;
  return r;
}

Classification classify(int p, int q, const ClassifyOptions& opts) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw DomainError("p and q must be distinct primes");
  }
  FamilyParams params = derive_params(p, q, opts.choice);
  std::vector<GroupPtr> groups;
  for (auto& g : all_groups(params)) {
    if (!opts.only || *g->label() == *opts.only) groups.push_back(g);
  }
  if (groups.empty()) {
    throw DomainError("no group " + opts.only->to_string() + " at " + params.to_string());
  }
  std::vector<std::shared_ptr<const AdditiveRun>> runs(groups.size());
  std::vector<std::optional<AdditiveSummary>> skipped(groups.size());
  for_each_parallel(opts.jobs, groups.size(), [&](std::size_t i) {
    const GroupPtr& g = groups[i];
    const GroupLabel label = *g->label();
    std::int64_t aut = aut_order_formula(label, p, q);
    if (opts.max_hol_order > 0 && aut * g->order() > opts.max_hol_order) {
      AdditiveSummary s;
      s.label = label;
      s.abelian = g->is_abelian();
      s.aut_order = aut;
      s.complete = false;
      s.error = "holomorph order " + std::to_string(aut * g->order()) +
                " exceeds the budget " + std::to_string(opts.max_hol_order);
      skipped[i] = std::move(s);
      return;
    }
    std::string path;
    if (!opts.cache_dir.empty()) {
      path = cache_file(opts.cache_dir, params, label);
      if (std::filesystem::exists(path)) {
        try {
          runs[i] = std::make_shared<const AdditiveRun>(import_cache(path, params));
          return;
        } catch (const CacheError& e) {
          std::cerr << "warning: ignoring cache " << path << ": " << e.what() << "\n";
        }
      }
    }
    EnumerateOptions eo = opts.enumerate;
    AdditiveRun run;
    try {
      run = run_additive(g, params, opts.strategy, eo);
    } catch (const SizeError&) {
      if (opts.strategy != Strategy::kStratified || !opts.fallback_dfs) throw;
      run = run_additive(g, params, Strategy::kDfs, eo);
    }
    if (opts.cross_check) {
      Strategy other = run.strategy == Strategy::kDfs ? Strategy::kStratified
                                                      : Strategy::kDfs;
      auto regs = enumerate(*run.hol, other, eo);
      if (regs != run.regulars) {
        throw ConsistencyError("strategies disagree on " + label.to_string() +
                               ": " + cross_validate(*run.hol, eo).divergence);
      }
      run.origin = "both";
    }
    if (!path.empty()) save_cache(opts.cache_dir, run, params);
    runs[i] = std::make_shared<const AdditiveRun>(std::move(run));
  });
  Classification out;
  std::vector<std::shared_ptr<const AdditiveRun>> done;
  std::vector<AdditiveSummary> missing;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (runs[i]) {
      done.push_back(runs[i]);
      out.runs[runs[i]->label] = runs[i];
    } else {
      missing.push_back(*skipped[i]);
    }
  }
  out.report = assemble_report(params, done, std::move(missing));
  out.report.strategy =
      opts.cross_check ? "both" : std::string(strategy_name(opts.strategy));
  return out;
}

// --- expected values -------------------------------------------------------

ExpectedTables load_expected(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open expected tables " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ExpectedTables t{ss.str()};
  try {
    json j = json::parse(t.json);
    if (j.at("version").get<int>() != kReportVersion) {
      throw DomainError("unsupported expected-table version");
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed expected tables: ") + e.what());
  }
  return t;
}

std::string default_expected_path() {
  return std::string(SKEWBRACE_DATA_DIR) + "/expected.json";
}

std::vector<ExpectedValue> expected_values(const ExpectedTables& t,
                                           const FamilyParams& params) {
  std::vector<ExpectedValue> out;
  ExprContext ctx = table_context(params);
  json doc = json::parse(t.json);
  for (const auto& table : doc.at("tables")) {
    bool applies = true;
    for (const auto& cond : table.value("regime", json::array())) {
      if (evaluate_int(cond.get<std::string>(), ctx) == 0) {
        applies = false;
        break;
      }
    }
    if (!applies) continue;
    const std::string id = table.at("id").get<std::string>();
    const std::string kind = table.at("kind").get<std::string>();
    for (const auto& row : table.at("rows")) {
      std::string add_text = kind == "cells" ? table.at("additive").get<std::string>()
                                             : row.at("additive").get<std::string>();
      GroupLabel additive = resolve_label(add_text, ctx, params.q);
      std::optional<int> ker;
      std::string ker_text;
      if (kind == "cells") {
        ker_text = row.at("ker").get<std::string>();
        ker = static_cast<int>(evaluate_int(ker_text, ctx));
      }
      for (const auto& [mul_text, formula] : row.at("cells").items()) {
        ExpectedValue v;
        v.additive = additive;
        v.mul = resolve_label(mul_text, ctx, params.q);
        v.ker = ker;
        v.formula = formula.get<std::string>();
        v.value = evaluate_int(v.formula, ctx);
        v.anchor = id + ": " + additive.to_string() +
                   (ker ? " ker=" + ker_text + "(" + std::to_string(*ker) + ")" : "") +
                   " x " + v.mul->to_string() + " = " + v.formula;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::optional<Totals> closed_form_totals(int p, int q) {
  if (p == 2 && q >= 5) {
    if (q % 4 == 3) return Totals{9, 20, 29};
    return Totals{11, 32, 43};
  }
  if (q > p + 1 && p + 1 > 3) {
    const std::int64_t P = p;
    if (q % p != 1) return Totals{4, 0, 4};
    if (q % (p * p) != 1) return Totals{P + 8, 2 * P * P + 6 * P, 2 * P * P + 7 * P + 8};
    return Totals{2 * P + 8, 6 * P * P + 4 * P, 6 * P * P + 6 * P + 8};
  }
  return std::nullopt;
}

TableCheck verify_tables(const ClassificationReport& r, const ExpectedTables& t) {
  TableCheck check;
  std::map<GroupLabel, const AdditiveSummary*> summary;
  for (const auto& s : r.additive) summary[s.label] = &s;
  auto done = [&](const GroupLabel& l) {
    auto it = summary.find(l);
    return it != summary.end() && it->second->complete;
  };
  auto compare = [&](std::string anchor, std::int64_t expected,
                     std::optional<std::int64_t> got) {
    ++check.checked;
    if (!got || *got != expected) check.diffs.push_back({std::move(anchor), expected, got});
  };

  auto values = expected_values(t, r.params);
  std::set<CellKey> cell_covered;
  std::set<std::pair<GroupLabel, GroupLabel>> cross_covered;
  std::set<GroupLabel> cell_rows, cross_rows;
  for (const auto& v : values) {
    if (!done(v.additive)) {
      compare(v.anchor, v.value, std::nullopt);
      continue;
    }
    std::int64_t got = 0;
    for (const auto& [key, count] : r.cells) {
      if (key.additive == v.additive && key.mul == *v.mul &&
          (!v.ker || key.ker == *v.ker)) {
        got += count;
      }
    }
    compare(v.anchor, v.value, got);
    if (v.ker) {
      cell_covered.insert({v.additive, *v.mul, *v.ker});
      cell_rows.insert(v.additive);
    } else {
      cross_covered.insert({v.additive, *v.mul});
      cross_rows.insert(v.additive);
    }
  }
  // Nonzero cells the tables leave blank.
  std::map<std::pair<GroupLabel, GroupLabel>, std::int64_t> cross;
  for (const auto& [key, count] : r.cells) {
    cross[{key.additive, key.mul}] += count;
    if (cell_rows.count(key.additive) && !cell_covered.count(key)) {
      compare("blank cell: " + key.additive.to_string() + " ker=" +
                  std::to_string(key.ker) + " x " + key.mul.to_string(),
              0, count);
    }
  }
  for (const auto& [key, count] : cross) {
    if (cross_rows.count(key.first) && !cross_covered.count(key)) {
      compare("blank cell: " + key.first.to_string() + " x " + key.second.to_string(),
              0, count);
    }
  }
  // Row sums against the per-group orbit totals.
  for (const auto& s : r.additive) {
    if (!s.complete) continue;
    std::int64_t sum = 0;
    for (const auto& [key, count] : r.cells) {
      if (key.additive == s.label) sum += count;
    }
    compare("row sum: " + s.label.to_string(), static_cast<std::int64_t>(s.orbits), sum);
  }
  compare("A + B = s", r.s, r.A + r.B);
  if (auto totals = closed_form_totals(r.p, r.q)) {
    auto got = [&](std::int64_t v) {
      return r.complete ? std::optional<std::int64_t>(v) : std::nullopt;
    };
    compare("closed form A", totals->A, got(r.A));
    compare("closed form B", totals->B, got(r.B));
    compare("closed form s", totals->s, got(r.s));
  }
  return check;
}

ConjectureResult conjecture(const ClassificationReport& r) {
  ConjectureResult out;
  out.s_computed = r.s;
  if (auto totals = closed_form_totals(r.p, r.q)) {
    out.s_formula = totals->s;
    out.match = r.complete && totals->s == r.s;
  }
  return out;
}

// --- serialization ---------------------------------------------------------

Format parse_format(std::string_view s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "md") return Format::kMd;
  throw DomainError("unknown format " + std::string(s));
}

namespace {

std::vector<std::pair<CellKey, int>> ordered_cells(const ClassificationReport& r) {
  std::vector<std::pair<CellKey, int>> v(r.cells.begin(), r.cells.end());
  std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
    auto kx = std::make_tuple(label_rank(x.first.additive, r.q),
                              label_rank(x.first.mul, r.q), x.first.ker);
    auto ky = std::make_tuple(label_rank(y.first.additive, r.q),
                              label_rank(y.first.mul, r.q), y.first.ker);
    return kx < ky;
  });
  return v;
}

std::string to_json(const ClassificationReport& r, bool timing) {
  ojson j;
  j["version"] = kReportVersion;
  j["p"] = r.p;
  j["q"] = r.q;
  j["order"] = r.p * r.p * r.q;
  j["regime"] = r.regime;
  j["params"] = params_to_json(r.params);
  j["strategy"] = r.strategy;
  j["complete"] = r.complete;
  j["additive"] = ojson::array();
  for (const auto& s : r.additive) {
    ojson a;
    a["label"] = s.label.to_string();
    a["abelian"] = s.abelian;
    a["aut_order"] = s.aut_order;
    a["regular_subgroups"] = s.regular_subgroups;
    a["orbits"] = s.orbits;
    a["strategy"] = s.strategy;
    a["complete"] = s.complete;
    if (!s.error.empty()) a["error"] = s.error;
    j["additive"].push_back(std::move(a));
  }
  j["cells"] = ojson::array();
  for (const auto& [key, count] : ordered_cells(r)) {
    j["cells"].push_back({{"additive", key.additive.to_string()},
                          {"multiplicative", key.mul.to_string()},
                          {"ker", key.ker},
                          {"count", count}});
  }
  j["totals"] = {{"A", r.A}, {"B", r.B}, {"s", r.s}};
  if (timing) {
    ojson t = ojson::object();
    for (const auto& [k, v] : r.seconds) t[k] = v;
    j["seconds"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const ClassificationReport& r) {
  std::ostringstream os;
  os << "kind,additive,multiplicative,ker,count\n";
  for (const auto& [key, count] : ordered_cells(r)) {
    os << "cell," << key.additive.to_string() << "," << key.mul.to_string() << ","
       << key.ker << "," << count << "\n";
  }
  os << "total,abelian,,," << r.A << "\n";
  os << "total,nonabelian,,," << r.B << "\n";
  os << "total,all,,," << r.s << "\n";
  return os.str();
}

void md_cross(std::ostringstream& os, const ClassificationReport& r,
              const std::vector<GroupLabel>& rows) {
  std::vector<GroupLabel> cols;
  std::map<std::pair<GroupLabel, GroupLabel>, int> cross;
  for (const auto& [key, count] : r.cells) {
    if (std::find(rows.begin(), rows.end(), key.additive) == rows.end()) continue;
    cross[{key.additive, key.mul}] += count;
    if (std::find(cols.begin(), cols.end(), key.mul) == cols.end()) cols.push_back(key.mul);
  }
  std::sort(cols.begin(), cols.end(),
            [&](const auto& a, const auto& b) { return label_less(a, b, r.q); });
  os << "| + \\ o |";
  for (const auto& c : cols) os << " " << c.to_string() << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : rows) {
    os << "| " << row.to_string() << " |";
    for (const auto& c : cols) {
      auto it = cross.find({row, c});
      os << " " << (it == cross.end() ? std::string("-") : std::to_string(it->second)) << " |";
    }
    os << "\n";
  }
}

std::string to_md(const ClassificationReport& r) {
  std::ostringstream os;
  os << "# Skew braces of order " << r.p * r.p * r.q << " (p=" << r.p << ", q=" << r.q
     << ")\n\n";
  os << "Regime: " << r.regime << "  \nParameters: " << r.params.to_string() << "\n\n";
  std::vector<GroupLabel> nonabelian, abelian;
  for (const auto& s : r.additive) {
    if (!s.complete) continue;
    (s.abelian ? abelian : nonabelian).push_back(s.label);
  }
  if (!nonabelian.empty()) {
    os << "## Nonabelian additive groups\n\n";
    md_cross(os, r, nonabelian);
    os << "\n";
  }
  if (!abelian.empty()) {
    os << "## Abelian additive groups\n\n";
    md_cross(os, r, abelian);
    os << "\n";
  }
  for (const auto& s : r.additive) {
    if (!s.complete) continue;
    os << "## " << s.label.to_string() << " by |ker lambda|\n\n";
    std::vector<GroupLabel> cols;
    std::set<int> kers;
    for (const auto& [key, count] : r.cells) {
      if (key.additive != s.label) continue;
      kers.insert(key.ker);
      if (std::find(cols.begin(), cols.end(), key.mul) == cols.end()) cols.push_back(key.mul);
    }
    std::sort(cols.begin(), cols.end(),
              [&](const auto& a, const auto& b) { return label_less(a, b, r.q); });
    os << "| ker |";
    for (const auto& c : cols) os << " " << c.to_string() << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
    os << "\n";
    for (int k : kers) {
      os << "| " << k << " |";
      for (const auto& c : cols) {
        auto it = r.cells.find({s.label, c, k});
        os << " " << (it == r.cells.end() ? std::string("-") : std::to_string(it->second))
           << " |";
      }
      os << "\n";
    }
    os << "\n";
  }
  os << "## Totals\n\n| A | B | s |\n|---|---|---|\n| " << r.A << " | " << r.B << " | "
     << r.s << " |\n";
  bool skipped = false;
  for (const auto& s : r.additive) {
    if (s.complete) continue;
    if (!skipped) os << "\nIncomplete:\n\n";
    skipped = true;
    os << "- " << s.label.to_string() << ": " << s.error << "\n";
  }
  return os.str();
}

}  // namespace

std::string export_report(const ClassificationReport& r, Format f, bool timing) {
  switch (f) {
    case Format::kJson: return to_json(r, timing);
    case Format::kCsv: return to_csv(r);
    case Format::kMd: return to_md(r);
  }
  return {};
}

ClassificationReport import_report(std::string_view json_text) {
  try {
    json j = json::parse(json_text);
    if (j.at("version").get<int>() != kReportVersion) {
      throw DomainError("unsupported report version");
    }
    ClassificationReport r;
    r.p = j.at("p").get<int>();
    r.q = j.at("q").get<int>();
    r.regime = j.at("regime").get<std::string>();
    r.params = params_from_json(j.at("params"));
    r.strategy = j.at("strategy").get<std::string>();
    r.complete = j.at("complete").get<bool>();
    for (const auto& a : j.at("additive")) {
      AdditiveSummary s;
      s.label = GroupLabel::parse(a.at("label").get<std::string>());
      s.abelian = a.at("abelian").get<bool>();
      s.aut_order = a.at("aut_order").get<std::int64_t>();
      s.regular_subgroups = a.at("regular_subgroups").get<std::size_t>();
      s.orbits = a.at("orbits").get<std::size_t>();
      s.strategy = a.at("strategy").get<std::string>();
      s.complete = a.at("complete").get<bool>();
      s.error = a.value("error", "");
      r.additive.push_back(std::move(s));
    }
    for (const auto& c : j.at("cells")) {
      CellKey key{GroupLabel::parse(c.at("additive").get<std::string>()),
                  GroupLabel::parse(c.at("multiplicative").get<std::string>()),
                  c.at("ker").get<int>()};
      r.cells[key] = c.at("count").get<int>();
    }
    r.A = j.at("totals").at("A").get<std::int64_t>();
    r.B = j.at("totals").at("B").get<std::int64_t>();
    r.s = j.at("totals").at("s").get<std::int64_t>();
    if (j.contains("seconds")) {
      for (const auto& [k, v] : j.at("seconds").items()) r.seconds[k] = v.get<double>();
    }
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

// --- orbit cache -------------------------------------------------------------

std::string cache_file(const std::string& dir, const FamilyParams& params,
                       const GroupLabel& label) {
  std::string name = label.to_string();
  for (char& c : name) {
    if (c == '(' || c == ')') c = '_';
  }
  return (std::filesystem::path(dir) /
          ("p" + std::to_string(params.p) + "_q" + std::to_string(params.q) + "_" +
           name + "_" + params_hash(params) + ".json"))
      .string();
}

void save_cache(const std::string& dir, const AdditiveRun& run,
                const FamilyParams& params) {
  const Holomorph& hol = *run.hol;
  ojson j;
  j["version"] = kCacheVersion;
  j["artifact"] = kArtifactVersion;
  j["p"] = params.p;
  j["q"] = params.q;
  j["additive"] = run.label.to_string();
  j["params"] = params_to_json(params);
  j["params_hash"] = params_hash(params);
  j["orbits"] = ojson::array();
  for (std::size_t o = 0; o < run.partition.orbits.size(); ++o) {
    ojson rep = ojson::array();
    for (Packed x : run.partition.orbits[o].representative.elements) {
      auto e = hol.unpack(x);
      rep.push_back({e.a, e.f});
    }
    const OrbitSummary& s = run.summaries[o];
    j["orbits"].push_back({{"rep", std::move(rep)},
                           {"pi2_size", s.pi2_size},
                           {"mul_label", s.mul_label.to_string()},
                           {"biskew", s.biskew}});
  }
  write_file_atomic(cache_file(dir, params, run.label), j.dump() + "\n");
}

AdditiveRun import_cache(const std::string& path, const FamilyParams& params) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    json j = json::parse(ss.str());
    if (j.at("version").get<int>() != kCacheVersion ||
        j.at("artifact").get<std::string>() != kArtifactVersion) {
      throw CacheError("cache version mismatch");
    }
    if (params_from_json(j.at("params")) != params ||
        j.at("params_hash").get<std::string>() != params_hash(params) ||
        j.at("p").get<int>() != params.p || j.at("q").get<int>() != params.q) {
      throw CacheError("cache parameters do not match");
    }
    GroupLabel label = GroupLabel::parse(j.at("additive").get<std::string>());
    GroupPtr group = build_group(label, params);
    const int n = group->order();
    // The Aut(A) size bounds the packed values before the holomorph exists.
    const std::int64_t aut = aut_order_formula(label, params.p, params.q);
    std::vector<HolSubgroup> reps;
    std::vector<OrbitSummary> claimed;
    for (const auto& o : j.at("orbits")) {
      HolSubgroup s;
      for (const auto& e : o.at("rep")) {
        if (e.size() != 2) throw CacheError("cached element is not a pair");
        auto a = e.at(0).get<std::int64_t>();
        auto f = e.at(1).get<std::int64_t>();
        if (a < 0 || a >= n || f < 0 || f >= aut) {
          throw CacheError("cached element out of range");
        }
        s.elements.push_back(static_cast<Packed>(f * n + a));
      }
      std::sort(s.elements.begin(), s.elements.end());
      reps.push_back(std::move(s));
      OrbitSummary c;
      c.pi2_size = o.at("pi2_size").get<int>();
      c.mul_label = GroupLabel::parse(o.at("mul_label").get<std::string>());
      c.biskew = o.at("biskew").get<bool>();
      claimed.push_back(c);
    }
    AdditiveRun run = run_from_representatives(group, params, reps);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      int o = run.orbit_of(reps[i]);
      const OrbitSummary& got = run.summaries[static_cast<std::size_t>(o)];
      if (got.pi2_size != claimed[i].pi2_size || got.mul_label != claimed[i].mul_label ||
          got.biskew != claimed[i].biskew) {
        throw CacheError("cached orbit data does not match recomputation");
      }
    }
    return run;
  } catch (const CacheError&) {
    throw;
  } catch (const json::exception& e) {
    throw CacheError(std::string("corrupt cache: ") + e.what());
  } catch (const Error& e) {
    throw CacheError(std::string("cache failed revalidation: ") + e.what());
  }
}

}  // namespace skewbrace
