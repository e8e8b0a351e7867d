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

// Regular subgroups of Hol(A) and their Aut(A)-conjugacy orbits. By the
// standard correspondence the orbits are the isomorphism classes of skew
// braces with additive group A.

#ifndef SKEWBRACE_ENUMERATE_HPP_
#define SKEWBRACE_ENUMERATE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "skewbrace/holomorph.hpp"

namespace skewbrace {

enum class Strategy { kDfs, kStratified };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view text);

struct EnumerateOptions {
  int jobs = 1;
  // Largest |A| accepted by either strategy.
  int max_order = kDefaultGroupBound;
  // Largest |Aut(A)| whose subgroups the stratified search enumerates.
  int max_aut_stratified = 5000;
};

// Depth-first search over chains of closed subgroups on which pi_1 is
// injective. Each step adds the unique element lying over a fixed
// uncovered point, so every regular subgroup is reached exactly once.
std::vector<HolSubgroup> enumerate_dfs(const Holomorph& hol,
                                       const EnumerateOptions& opts = {});

// Search by the image K = pi_2(G): for each conjugacy class of subgroups
// K <= Aut(A) with |K| dividing |A| and each N <= A of index |K|, lift
// generators of K to pairs (u, alpha) over cosets of N subject to the
// normality and relation conditions, then spread over Aut(A)-conjugates.
std::vector<HolSubgroup> enumerate_stratified(const Holomorph& hol,
                                              const EnumerateOptions& opts = {});

std::vector<HolSubgroup> enumerate(const Holomorph& hol, Strategy strategy,
                                   const EnumerateOptions& opts = {});

// Subgroups of Aut(A) whose order divides n, each sorted, ascending.
std::vector<std::vector<int>> aut_subgroups_dividing(const AutGroup& aut, int n);

struct OrbitClass {
  HolSubgroup representative;  // lexicographically least member
  std::size_t orbit_size = 0;
  int pi2_size = 0;
  std::vector<std::size_t> members;  // indices into the input list
  // Generators of the representative, for provenance.
  std::vector<Packed> generators;
};

struct OrbitPartition {
  std::vector<OrbitClass> orbits;  // ordered by representative
  std::vector<int> orbit_of;       // input index -> orbit index
};

// Orbits under S -> (1, h) S (1, h)^-1, closed under the generators of
// Aut(A). Input must be duplicate-free.
OrbitPartition orbit_partition(const Holomorph& hol,
                               const std::vector<HolSubgroup>& regulars);

// A small generating set of a subgroup of the holomorph.
std::vector<Packed> subgroup_generators(const Holomorph& hol,
                                        const HolSubgroup& s);

struct CrossValidation {
  bool equal = false;
  std::size_t dfs_count = 0;
  std::size_t stratified_count = 0;
  std::size_t orbit_count = 0;
  // Empty when equal, otherwise names the first differing subgroup.
  std::string divergence;
};

CrossValidation cross_validate(const Holomorph& hol,
                               const EnumerateOptions& opts = {});

}  // namespace skewbrace

#endif  // SKEWBRACE_ENUMERATE_HPP_
