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


// The per-additive-group pipeline shared by the report and the catalog:
// structured Aut, holomorph, regular subgroups, conjugation orbits and the
// brace invariants of every orbit representative.

#ifndef SKEWBRACE_PIPELINE_HPP_
#define SKEWBRACE_PIPELINE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/braces.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/families.hpp"
#include "skewbrace/holomorph.hpp"

namespace skewbrace {

struct OrbitSummary {
  int pi2_size = 0;
  int ker_size = 0;
  GroupLabel mul_label;
  bool biskew = false;
};

struct AdditiveRun {
  GroupLabel label;
  GroupPtr group;
  StructuredAutPtr saut;
  std::shared_ptr<const Holomorph> hol;
  Strategy strategy = Strategy::kStratified;
  std::string origin;  // dfs, stratified, both or cache
  std::vector<HolSubgroup> regulars;  // sorted
  OrbitPartition partition;
  std::vector<OrbitSummary> summaries;  // one per orbit
  double seconds = 0;

  // Orbit of a regular subgroup, or -1 when it is not in the list.
  int orbit_of(const HolSubgroup& s) const;
};

// Summary of one regular subgroup: |pi_2|, |ker lambda| = n / |pi_2|, the
// isomorphism class of (B, o) and whether the brace is bi-skew.
OrbitSummary summarize(const Holomorph& hol, const HolSubgroup& g, int p,
                       int q);

// Runs the whole pipeline for one additive group.
AdditiveRun run_additive(const GroupPtr& group, const FamilyParams& params,
                         Strategy strategy, const EnumerateOptions& opts = {});

// Rebuilds a run from previously computed orbit representatives. Every
// representative is revalidated as a regular subgroup and the orbits are
// recomputed; throws ConsistencyError on any mismatch.
AdditiveRun run_from_representatives(const GroupPtr& group,
                                     const FamilyParams& params,
                                     const std::vector<HolSubgroup>& reps);

}  // namespace skewbrace

#endif  // SKEWBRACE_PIPELINE_HPP_
