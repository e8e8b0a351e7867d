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


#include "skewbrace/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "skewbrace/errors.hpp"

namespace skewbrace {

int AdditiveRun::orbit_of(const HolSubgroup& s) const {
  auto it = std::lower_bound(regulars.begin(), regulars.end(), s);
  if (it == regulars.end() || *it != s) return -1;
  return partition.orbit_of[static_cast<std::size_t>(it - regulars.begin())];
}

OrbitSummary summarize(const Holomorph& hol, const HolSubgroup& g, int p,
                       int q) {
  auto brace = brace_from_regular(hol, g);
  OrbitSummary out;
  out.pi2_size = static_cast<int>(pi2_image(hol, g).size());
  out.ker_size = hol.n() / out.pi2_size;
  out.mul_label = identify_p2q(*brace.circ_group(), p, q);
  out.biskew = is_biskew(brace);
  return out;
}

namespace {

AdditiveRun prepare(const GroupPtr& group, const FamilyParams& params) {
  AdditiveRun run;
  if (!group->label()) throw DomainError("additive group has no label");
  run.label = *group->label();
  run.group = group;
  run.saut = structured_aut(group, params);
  run.hol = std::make_shared<const Holomorph>(group, run.saut->auts());
  return run;
}

void finish(AdditiveRun& run, const FamilyParams& params) {
  run.partition = orbit_partition(*run.hol, run.regulars);
  for (const auto& o : run.partition.orbits) {
    run.summaries.push_back(
        summarize(*run.hol, o.representative, params.p, params.q));
  }
}

}  // namespace

AdditiveRun run_additive(const GroupPtr& group, const FamilyParams& params,
                         Strategy strategy, const EnumerateOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  AdditiveRun run = prepare(group, params);
  run.strategy = strategy;
  run.origin = std::string(strategy_name(strategy));
  run.regulars = enumerate(*run.hol, strategy, opts);
  finish(run, params);
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return run;
}

AdditiveRun run_from_representatives(const GroupPtr& group,
                                     const FamilyParams& params,
                                     const std::vector<HolSubgroup>& reps) {
  auto t0 = std::chrono::steady_clock::now();
  AdditiveRun run = prepare(group, params);
  run.origin = "cache";
  const Holomorph& hol = *run.hol;
  const AutGroup& aut = hol.auts();
  std::unordered_set<HolSubgroup, HolSubgroupHash> seen;
  for (const auto& rep : reps) {
    if (!std::is_sorted(rep.elements.begin(), rep.elements.end()) ||
        std::adjacent_find(rep.elements.begin(), rep.elements.end()) !=
            rep.elements.end()) {
      throw ConsistencyError("cached subgroup is not a sorted element list");
    }
    for (Packed x : rep.elements) {
      if (x >= static_cast<Packed>(hol.order())) {
        throw ConsistencyError("cached element out of range");
      }
    }
    auto closed = hol_closure(hol, rep.elements, hol.n());
    if (!closed || *closed != rep) {
      throw ConsistencyError("cached subgroup is not closed");
    }
    if (!is_regular(hol, rep)) {
      throw ConsistencyError("cached subgroup is not regular");
    }
    if (seen.count(rep)) {
      throw ConsistencyError("cached representatives share an orbit");
    }
    std::vector<HolSubgroup> queue{rep};
    seen.insert(rep);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int h : aut.generators()) {
        auto c = conjugate(hol, h, queue[i]);
        if (seen.insert(c).second) queue.push_back(std::move(c));
      }
    }
  }
  run.regulars.assign(seen.begin(), seen.end());
  std::sort(run.regulars.begin(), run.regulars.end());
  finish(run, params);
  if (run.partition.orbits.size() != reps.size()) {
    throw ConsistencyError("cached representatives share an orbit");
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return run;
}

}  // namespace skewbrace
