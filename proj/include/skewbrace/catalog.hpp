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


// Explicit representative subgroups stored as data and checked against the
// enumeration.
//
// A witness is a generator recipe for a family of regular subgroups of
// Hol(A). Each generator is a word in the presentation generators of A
// paired with structured-automorphism coordinates; exponents, coordinates
// and parameter ranges are expressions in the witness language (expr.hpp).
// Witnesses sharing a lemma id make up one pi_2 stratum of one additive
// group, and verification checks that they hit every orbit of that stratum
// exactly once. The data file format is described in data/README.md.

#ifndef SKEWBRACE_CATALOG_HPP_
#define SKEWBRACE_CATALOG_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewbrace/expr.hpp"
#include "skewbrace/families.hpp"
#include "skewbrace/holomorph.hpp"
#include "skewbrace/pipeline.hpp"

namespace skewbrace {

inline constexpr int kCatalogVersion = 1;

struct ParamRange {
  std::string name;
  std::string from;  // inclusive
  std::string to;    // inclusive
};

struct LetBinding {
  std::string name;
  std::string expr;
  std::string mod;  // optional modulus expression
};

struct WitnessGenerator {
  std::string word;
  // Coordinate name -> expression. "M" sets (a, b, c, d) from a matrix and
  // "shift" sets (n, m) from a vector. Missing coordinates take their
  // identity values.
  std::map<std::string, std::string> aut;
};

struct ClassRule {
  std::string when;   // empty: always
  std::string label;  // "A" stands for the additive group
};

struct Witness {
  std::string id;
  std::string lemma;
  std::string additive;
  std::vector<std::string> regime;  // boolean expressions, all must hold
  std::string pi2;
  std::vector<ParamRange> params;
  std::vector<std::string> exclude;
  std::vector<LetBinding> let;
  std::vector<WitnessGenerator> generators;
  std::string count;
  std::vector<ClassRule> classes;
  std::string note;
};

// A stratum asserted to contain no regular subgroups.
struct EmptyStratum {
  std::string id;
  std::string additive;
  std::vector<std::string> regime;
  std::string pi2;
  std::string note;
};

struct Catalog {
  int version = kCatalogVersion;
  std::vector<Witness> witnesses;
  std::vector<EmptyStratum> empty;
};

// Throws DomainError on malformed input or a version mismatch.
Catalog parse_catalog(std::string_view json_text);
Catalog load_catalog(const std::string& path);
// The witness file installed with the library sources.
std::string default_catalog_path();

// Variables visible to every expression: p, q, the defined parameters
// among t, g, r, h, xi, F and the regime flags as 0/1.
ExprContext base_context(const FamilyParams& params);

bool regime_holds(const std::vector<std::string>& regime,
                  const FamilyParams& params);

struct WitnessInstance {
  std::map<std::string, std::int64_t> bindings;
  std::vector<Packed> generators;
  HolSubgroup subgroup;
  std::optional<GroupLabel> expected_class;

  std::string describe(const std::string& id) const;
};

// One instance for explicit parameter bindings. Throws ConstraintError when
// the recipe arithmetic is undefined and ConsistencyError when the closure
// does not have order p^2 q.
WitnessInstance evaluate_instance(const Witness& w, const FamilyParams& params,
                                  const StructuredAut& saut,
                                  const Holomorph& hol,
                                  const std::map<std::string, std::int64_t>& bindings);

// All instances over the parameter ranges, skipping excluded bindings.
std::vector<WitnessInstance> evaluate_witness(const Witness& w,
                                              const FamilyParams& params,
                                              const StructuredAut& saut,
                                              const Holomorph& hol);

struct LemmaReport {
  std::string lemma;
  std::string additive;
  int pi2 = 0;
  std::int64_t expected = 0;  // sum of the witnesses' counts
  std::size_t instances = 0;
  std::size_t stratum_orbits = 0;
  bool ok = true;
  std::vector<std::string> problems;
};

using RunProvider = std::function<const AdditiveRun&(const GroupLabel&)>;

// Lemma ids whose witnesses apply at params, in file order.
std::vector<std::string> applicable_lemmas(const Catalog& c,
                                           const FamilyParams& params);

// Throws DomainError if the lemma is unknown or out of regime.
LemmaReport verify_lemma(const Catalog& c, const std::string& lemma,
                         const FamilyParams& params, const RunProvider& runs);

// Every applicable lemma and empty stratum.
std::vector<LemmaReport> verify_catalog(const Catalog& c,
                                        const FamilyParams& params,
                                        const RunProvider& runs);

}  // namespace skewbrace

#endif  // SKEWBRACE_CATALOG_HPP_
