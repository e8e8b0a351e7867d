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

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skewbrace/errors.hpp"

#ifndef SKEWBRACE_DATA_DIR
#define SKEWBRACE_DATA_DIR "data"
#endif

namespace skewbrace {

using nlohmann::json;

namespace {

std::vector<std::string> strings(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}

std::string text(const json& j, const char* key, const char* fallback = "") {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<std::string>();
}

Witness parse_witness(const json& j) {
  Witness w;
  w.id = j.at("id").get<std::string>();
  w.lemma = j.at("lemma").get<std::string>();
  w.additive = j.at("additive").get<std::string>();
  w.regime = strings(j, "regime");
  w.pi2 = j.at("pi2").get<std::string>();
  for (const auto& r : j.value("params", json::array())) {
    w.params.push_back({r.at("name").get<std::string>(),
                        r.at("from").get<std::string>(),
                        r.at("to").get<std::string>()});
  }
  w.exclude = strings(j, "exclude");
  for (const auto& l : j.value("let", json::array())) {
    w.let.push_back({l.at("name").get<std::string>(),
                     l.at("expr").get<std::string>(), text(l, "mod")});
  }
  for (const auto& g : j.at("generators")) {
    WitnessGenerator gen;
    gen.word = g.at("word").get<std::string>();
    if (g.contains("aut")) {
      gen.aut = g.at("aut").get<std::map<std::string, std::string>>();
    }
    w.generators.push_back(std::move(gen));
  }
  w.count = text(j, "count", "1");
  for (const auto& c : j.value("class", json::array())) {
    w.classes.push_back({text(c, "when"), c.at("label").get<std::string>()});
  }
  w.note = text(j, "note");
  return w;
}

bool truthy(const std::string& expr, const ExprContext& ctx) {
  return evaluate_int(expr, ctx) != 0;
}

// Splits at whitespace outside parentheses and brackets.
std::vector<std::string> factors(const std::string& word) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : word) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && (ch == ' ' || ch == '\t')) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  if (depth != 0) throw DomainError("unbalanced word: " + word);
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int word_element(const FiniteGroup& A, const std::string& word,
                 const ExprContext& ctx) {
  int x = A.identity();
  for (const auto& f : factors(word)) {
    if (f.front() == '[') {
      if (f.back() != ']') throw DomainError("bad vector factor: " + f);
      Value v = evaluate(std::string_view(f).substr(1, f.size() - 2), ctx);
      const auto* vec = std::get_if<Vec2>(&v);
      if (!vec) throw DomainError("factor " + f + " is not a vector");
      x = A.mul(x, A.pow(A.generator("sigma"), vec->x));
      x = A.mul(x, A.pow(A.generator("tau"), vec->y));
      continue;
    }
    auto caret = f.find('^');
    int gen = A.generator(f.substr(0, caret));
    std::int64_t e = 1;
    if (caret != std::string::npos) {
      e = evaluate_int(std::string_view(f).substr(caret + 1), ctx,
                       A.element_order(gen));
    }
    x = A.mul(x, A.pow(gen, e));
  }
  return x;
}

int aut_element(const StructuredAut& saut,
                const std::map<std::string, std::string>& spec,
                const ExprContext& ctx) {
  const auto& names = saut.coordinate_names();
  const auto& moduli = saut.moduli();
  std::vector<int> c = saut.coords(0);
  auto slot = [&](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw DomainError("no automorphism coordinate " + name);
    return static_cast<std::size_t>(it - names.begin());
  };
  auto set = [&](const std::string& name, std::int64_t v) {
    auto i = slot(name);
    c[i] = static_cast<int>(((v % moduli[i]) + moduli[i]) % moduli[i]);
  };
  for (const auto& [key, expr] : spec) {
    if (key == "M") {
      Value v = evaluate(expr, ctx);
      const auto* m = std::get_if<Mat2>(&v);
      if (!m) throw DomainError("coordinate M needs a matrix: " + expr);
      set("a", m->a);
      set("b", m->b);
      set("c", m->c);
      set("d", m->d);
    } else if (key == "shift") {
      Value v = evaluate(expr, ctx);
      const auto* s = std::get_if<Vec2>(&v);
      if (!s) throw DomainError("coordinate shift needs a vector: " + expr);
      set("n", s->x);
      set("m", s->y);
    } else {
      auto i = slot(key);
      c[i] = static_cast<int>(evaluate_int(expr, ctx, moduli[i]));
    }
  }
  int f = saut.index(c);
  if (f < 0) {
    std::ostringstream os;
    os << "coordinates (";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ") do not define an automorphism";
    throw ConstraintError(os.str());
  }
  return f;
}

ExprContext bound_context(const FamilyParams& params,
                          const std::map<std::string, std::int64_t>& bindings) {
  ExprContext ctx = base_context(params);
  for (const auto& [k, v] : bindings) ctx.vars[k] = v;
  return ctx;
}

}  // namespace

Catalog parse_catalog(std::string_view json_text) {
  try {
    json j = json::parse(json_text);
    Catalog c;
    c.version = j.at("version").get<int>();
    if (c.version != kCatalogVersion) {
      throw DomainError("unsupported catalog version " + std::to_string(c.version));
    }
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(parse_witness(w));
    for (const auto& e : j.value("empty_strata", json::array())) {
      c.empty.push_back({e.at("id").get<std::string>(),
                         e.at("additive").get<std::string>(), strings(e, "regime"),
                         e.at("pi2").get<std::string>(), text(e, "note")});
    }
    return c;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed catalog: ") + e.what());
  }
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string default_catalog_path() {
  return std::string(SKEWBRACE_DATA_DIR) + "/witnesses.json";
}

ExprContext base_context(const FamilyParams& params) {
  ExprContext ctx;
  ctx.p = params.p;
  ctx.vars["p"] = std::int64_t{params.p};
  ctx.vars["q"] = std::int64_t{params.q};
  auto opt = [&](const char* name, const std::optional<int>& v) {
    if (v) ctx.vars[name] = std::int64_t{*v};
  };
  opt("t", params.t);
  opt("g", params.g);
  opt("r", params.r);
  opt("h", params.h);
  opt("xi", params.xi);
  if (params.xi) ctx.xi = *params.xi;
  if (params.F) ctx.vars["F"] = *params.F;
  Regime reg = regime_of(params.p, params.q);
  ctx.vars["p_one_mod_q"] = std::int64_t{reg.p_one_mod_q};
  ctx.vars["p_minus_one_mod_q"] = std::int64_t{reg.p_minus_one_mod_q};
  ctx.vars["q_one_mod_p"] = std::int64_t{reg.q_one_mod_p};
  ctx.vars["q_one_mod_p2"] = std::int64_t{reg.q_one_mod_p2};
  return ctx;
}

bool regime_holds(const std::vector<std::string>& regime,
                  const FamilyParams& params) {
  ExprContext ctx = base_context(params);
  // In order, so later conditions may use parameters that earlier ones
  // guarantee to exist.
  for (const auto& cond : regime) {
    if (!truthy(cond, ctx)) return false;
  }
  return true;
}

std::string WitnessInstance::describe(const std::string& id) const {
  std::ostringstream os;
  os << id;
  if (!bindings.empty()) {
    os << "(";
    bool first = true;
    for (const auto& [k, v] : bindings) {
      os << (first ? "" : ", ") << k << "=" << v;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

WitnessInstance evaluate_instance(
    const Witness& w, const FamilyParams& params, const StructuredAut& saut,
    const Holomorph& hol, const std::map<std::string, std::int64_t>& bindings) {
  ExprContext ctx = bound_context(params, bindings);
  for (const auto& l : w.let) {
    std::optional<std::int64_t> m;
    if (!l.mod.empty()) m = evaluate_int(l.mod, ctx);
    ctx.vars[l.name] = evaluate(l.expr, ctx, m);
  }
  WitnessInstance inst;
  inst.bindings = bindings;
  const FiniteGroup& A = hol.base();
  for (const auto& g : w.generators) {
    int a = word_element(A, g.word, ctx);
    int f = aut_element(saut, g.aut, ctx);
    inst.generators.push_back(hol.pack(a, f));
  }
  auto closed = hol_closure(hol, inst.generators, hol.n());
  if (!closed || static_cast<int>(closed->size()) != hol.n()) {
    throw ConsistencyError(inst.describe(w.id) +
                           " does not generate a subgroup of order " +
                           std::to_string(hol.n()));
  }
  inst.subgroup = std::move(*closed);
  for (const auto& rule : w.classes) {
    if (!rule.when.empty() && !truthy(rule.when, ctx)) continue;
    inst.expected_class = rule.label == "A" ? *A.label() : GroupLabel::parse(rule.label);
    break;
  }
  return inst;
}

std::vector<WitnessInstance> evaluate_witness(const Witness& w,
                                              const FamilyParams& params,
                                              const StructuredAut& saut,
                                              const Holomorph& hol) {
  std::vector<WitnessInstance> out;
  std::map<std::string, std::int64_t> bindings;
  std::function<void(std::size_t)> loop = [&](std::size_t i) {
    ExprContext ctx = bound_context(params, bindings);
    if (i == w.params.size()) {
      for (const auto& ex : w.exclude) {
        if (truthy(ex, ctx)) return;
      }
      out.push_back(evaluate_instance(w, params, saut, hol, bindings));
      return;
    }
    const auto& range = w.params[i];
    std::int64_t from = evaluate_int(range.from, ctx);
    std::int64_t to = evaluate_int(range.to, ctx);
    for (std::int64_t v = from; v <= to; ++v) {
      bindings[range.name] = v;
      loop(i + 1);
    }
    bindings.erase(range.name);
  };
  loop(0);
  return out;
}

std::vector<std::string> applicable_lemmas(const Catalog& c,
                                           const FamilyParams& params) {
  std::vector<std::string> out;
  for (const auto& w : c.witnesses) {
    if (std::find(out.begin(), out.end(), w.lemma) != out.end()) continue;
    if (regime_holds(w.regime, params)) out.push_back(w.lemma);
  }
  return out;
}

LemmaReport verify_lemma(const Catalog& c, const std::string& lemma,
                         const FamilyParams& params, const RunProvider& runs) {
  std::vector<const Witness*> ws;
  bool known = false;
  for (const auto& w : c.witnesses) {
    if (w.lemma != lemma) continue;
    known = true;
    if (regime_holds(w.regime, params)) ws.push_back(&w);
  }
  if (!known) throw DomainError("unknown lemma " + lemma);
  if (ws.empty()) {
    throw DomainError("lemma " + lemma + " does not apply at " + params.to_string());
  }
  ExprContext ctx = base_context(params);
  LemmaReport rep;
  rep.lemma = lemma;
  rep.additive = ws.front()->additive;
  rep.pi2 = static_cast<int>(evaluate_int(ws.front()->pi2, ctx));
  for (const auto* w : ws) {
    if (w->additive != rep.additive ||
        evaluate_int(w->pi2, ctx) != rep.pi2) {
      throw DomainError("witnesses of lemma " + lemma + " disagree on the stratum");
    }
  }
  const AdditiveRun& run = runs(GroupLabel::parse(rep.additive));
  const Holomorph& hol = *run.hol;
  std::map<int, std::string> owner;
  for (const auto* w : ws) {
    std::int64_t count = evaluate_int(w->count, ctx);
    rep.expected += count;
    std::vector<WitnessInstance> insts;
    try {
      insts = evaluate_witness(*w, params, *run.saut, hol);
    } catch (const Error& e) {
      rep.problems.push_back(w->id + ": " + e.what());
      continue;
    }
    rep.instances += insts.size();
    if (static_cast<std::int64_t>(insts.size()) != count) {
      rep.problems.push_back(w->id + " has " + std::to_string(insts.size()) +
                             " instances, expected " + std::to_string(count));
    }
    for (const auto& inst : insts) {
      std::string name = inst.describe(w->id);
      if (!is_regular(hol, inst.subgroup)) {
        rep.problems.push_back(name + " is not regular");
        continue;
      }
      int o = run.orbit_of(inst.subgroup);
      if (o < 0) {
        rep.problems.push_back(name + " is missing from the enumeration");
        continue;
      }
      const OrbitSummary& s = run.summaries[static_cast<std::size_t>(o)];
      if (s.pi2_size != rep.pi2) {
        rep.problems.push_back(name + " has |pi2| = " + std::to_string(s.pi2_size));
      }
      if (inst.expected_class && *inst.expected_class != s.mul_label) {
        rep.problems.push_back(name + " has class " + s.mul_label.to_string() +
                               ", expected " + inst.expected_class->to_string());
      }
      auto [it, fresh] = owner.emplace(o, name);
      if (!fresh) {
        rep.problems.push_back(name + " is conjugate to " + it->second);
      }
    }
  }
  for (std::size_t o = 0; o < run.summaries.size(); ++o) {
    if (run.summaries[o].pi2_size != rep.pi2) continue;
    ++rep.stratum_orbits;
    if (!owner.count(static_cast<int>(o))) {
      rep.problems.push_back("orbit " + std::to_string(o) + " of the stratum has no witness");
    }
  }
  rep.ok = rep.problems.empty();
  return rep;
}

std::vector<LemmaReport> verify_catalog(const Catalog& c,
                                        const FamilyParams& params,
                                        const RunProvider& runs) {
  std::vector<LemmaReport> out;
  for (const auto& lemma : applicable_lemmas(c, params)) {
    out.push_back(verify_lemma(c, lemma, params, runs));
  }
  ExprContext ctx = base_context(params);
  for (const auto& e : c.empty) {
    if (!regime_holds(e.regime, params)) continue;
    LemmaReport rep;
    rep.lemma = e.id;
    rep.additive = e.additive;
    rep.pi2 = static_cast<int>(evaluate_int(e.pi2, ctx));
    const AdditiveRun& run = runs(GroupLabel::parse(e.additive));
    for (std::size_t o = 0; o < run.summaries.size(); ++o) {
      if (run.summaries[o].pi2_size == rep.pi2) {
        ++rep.stratum_orbits;
        rep.problems.push_back("orbit " + std::to_string(o) + " lies in an empty stratum");
      }
    }
    rep.ok = rep.problems.empty();
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace skewbrace
