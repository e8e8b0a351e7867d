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

#include "skewbrace/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "skewbrace/errors.hpp"

namespace skewbrace {

std::string_view strategy_name(Strategy s) {
  return s == Strategy::kDfs ? "dfs" : "stratified";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "dfs") return Strategy::kDfs;
  if (text == "stratified") return Strategy::kStratified;
  throw DomainError("unknown strategy: " + std::string(text));
}

namespace {

void check_order(const Holomorph& hol, const EnumerateOptions& opts) {
  if (hol.n() > opts.max_order) {
    throw SizeError("|A| = " + std::to_string(hol.n()) +
                    " exceeds the enumeration bound " +
                    std::to_string(opts.max_order));
  }
}

// Runs work(i, worker) for i in [0, count) on opts.jobs threads.
template <typename Work>
void parallel_for(int jobs, std::size_t count, Work&& work) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

HolSubgroup sorted_subgroup(const std::vector<Packed>& elems) {
  HolSubgroup s{elems};
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

std::vector<HolSubgroup> merge_sorted(std::vector<std::vector<HolSubgroup>> parts) {
  std::vector<HolSubgroup> out;
  for (auto& part : parts) {
    for (auto& s : part) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- DFS ------------------------------------------------------------------------

class DfsSearch {
 public:
  DfsSearch(const Holomorph& hol, const std::vector<std::vector<int>>& cand)
      : hol_(hol), cand_(cand), sc_(hol) {}

  void run_from(Packed first, std::vector<HolSubgroup>& out) {
    sc_.reset();
    if (sc_.extend(first, hol_.n()) && hol_.n() % sc_.elements().size() == 0) {
      descend(out);
    }
  }

  int pick_point() const {
    int best = -1;
    for (int a = 0; a < hol_.n(); ++a) {
      if (sc_.covers(a)) continue;
      if (best < 0 || cand_[a].size() < cand_[best].size()) best = a;
    }
    return best;
  }

 private:
  void descend(std::vector<HolSubgroup>& out) {
    const std::size_t n = hol_.n();
    if (sc_.elements().size() == n) {
      out.push_back(sorted_subgroup(sc_.elements()));
      return;
    }
    int a = pick_point();
    std::vector<Packed> elems = sc_.elements();
    std::vector<Packed> gens = sc_.generators();
    for (int f : cand_[a]) {
      if (sc_.extend(hol_.pack(a, f), n) && n % sc_.elements().size() == 0) {
        descend(out);
      }
      sc_.assign(elems, gens);
    }
  }

  const Holomorph& hol_;
  const std::vector<std::vector<int>>& cand_;
  SemiregularClosure sc_;
};

}  // namespace

std::vector<HolSubgroup> enumerate_dfs(const Holomorph& hol,
                                       const EnumerateOptions& opts) {
  check_order(hol, opts);
  const int n = hol.n();
  const int m = hol.auts().size();
  // Pairs whose cyclic subgroup already acts with trivial point stabilizer
  // and has order dividing n.
  std::vector<std::vector<int>> cand(n);
  {
    SemiregularClosure sc(hol);
    for (int a = 0; a < n; ++a) {
      if (a == hol.base().identity()) continue;
      for (int f = 0; f < m; ++f) {
        sc.reset();
        if (sc.extend(hol.pack(a, f), n) && n % sc.elements().size() == 0) {
          cand[a].push_back(f);
        }
      }
    }
  }
  if (n == 1) return {HolSubgroup{{hol.identity()}}};
  DfsSearch probe(hol, cand);
  int a0 = probe.pick_point();
  // The identity point is covered from the start, so a0 is a non-identity
  // point; every regular subgroup has exactly one element over it.
  std::vector<std::vector<HolSubgroup>> parts(cand[a0].size());
  std::vector<std::unique_ptr<DfsSearch>> workers;
  for (int w = 0; w < std::max(1, opts.jobs); ++w) {
    workers.push_back(std::make_unique<DfsSearch>(hol, cand));
  }
  parallel_for(opts.jobs, cand[a0].size(), [&](std::size_t i, int w) {
    workers[w]->run_from(hol.pack(a0, cand[a0][i]), parts[i]);
  });
  return merge_sorted(std::move(parts));
}

// --- stratified -----------------------------------------------------------------

std::vector<std::vector<int>> aut_subgroups_dividing(const AutGroup& aut, int n) {
  const int m = aut.size();
  // One generator per cyclic subgroup of order dividing n.
  std::vector<int> cyclic_gens;
  {
    std::set<std::vector<int>> seen;
    for (int f = 0; f < m; ++f) {
      if (n % aut.element_order(f) != 0) continue;
      int one[] = {f};
      if (seen.insert(aut.closure(one)).second) cyclic_gens.push_back(f);
    }
  }
  struct Entry {
    std::vector<int> elems;
    std::vector<int> gens;
  };
  std::map<std::vector<int>, std::size_t> index;
  std::vector<Entry> queue{{{0}, {}}};
  index.emplace(queue[0].elems, 0);
  std::vector<char> in(m, 0);
  std::vector<int> buf;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (int f : cyclic_gens) {
      if (std::binary_search(queue[qi].elems.begin(), queue[qi].elems.end(), f)) {
        continue;
      }
      // Bounded closure of <H, f>.
      std::vector<int> gens = queue[qi].gens;
      gens.push_back(f);
      std::fill(in.begin(), in.end(), 0);
      buf.assign(queue[qi].elems.begin(), queue[qi].elems.end());
      for (int x : buf) in[x] = 1;
      bool ok = true;
      for (std::size_t i = 0; i < buf.size() && ok; ++i) {
        for (int s : gens) {
          int y = aut.compose(buf[i], s);
          if (!in[y]) {
            in[y] = 1;
            buf.push_back(y);
            if (static_cast<int>(buf.size()) > n) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok || n % static_cast<int>(buf.size()) != 0) continue;
      std::sort(buf.begin(), buf.end());
      if (index.emplace(buf, queue.size()).second) {
        queue.push_back({buf, gens});
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& [elems, i] : index) out.push_back(elems);
  return out;
}

namespace {

std::vector<int> conjugate_aut_subgroup(const AutGroup& aut, int h,
                                        const std::vector<int>& sub) {
  std::vector<int> out;
  int hi = aut.inverse(h);
  for (int x : sub) out.push_back(aut.compose(aut.compose(h, x), hi));
  std::sort(out.begin(), out.end());
  return out;
}

// Least member of each conjugacy class.
std::vector<std::vector<int>> class_representatives(
    const AutGroup& aut, const std::vector<std::vector<int>>& subs) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i], i);
  std::vector<int> cls(subs.size(), -1);
  std::vector<std::vector<int>> reps;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    cls[i] = c;
    std::vector<std::size_t> queue{i};
    std::size_t least = i;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (int h : aut.generators()) {
        auto conj = conjugate_aut_subgroup(aut, h, subs[queue[qi]]);
        std::size_t j = index.at(conj);
        if (cls[j] < 0) {
          cls[j] = c;
          queue.push_back(j);
          least = std::min(least, j);
        }
      }
    }
    reps.push_back(subs[least]);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<int> small_generating_set(const AutGroup& aut,
                                      const std::vector<int>& sub) {
  std::vector<int> by_order = sub;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return aut.element_order(a) > aut.element_order(b);
  });
  std::vector<int> gens;
  std::vector<int> current{0};
  for (int f : by_order) {
    if (current.size() == sub.size()) break;
    if (std::binary_search(current.begin(), current.end(), f)) continue;
    gens.push_back(f);
    current = aut.closure(gens);
  }
  return gens;
}

std::vector<int> search_generators_of(const FiniteGroup& g,
                                      const std::vector<int>& sub) {
  std::vector<int> by_order = sub;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<int> gens;
  std::vector<int> current{g.identity()};
  for (int x : by_order) {
    if (current.size() == sub.size()) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = closure(g, gens);
  }
  return gens;
}

struct StratumInput {
  const std::vector<int>* K;
  std::vector<int> k_gens;
  const std::vector<int>* N;
  std::vector<int> n_gens;
};

class LiftSearch {
 public:
  explicit LiftSearch(const Holomorph& hol) : hol_(hol), sc_(hol) {}

  void run(const StratumInput& in, std::vector<HolSubgroup>& out) {
    const FiniteGroup& A = hol_.base();
    const AutGroup& aut = hol_.auts();
    const int n = hol_.n();
    std::vector<char> in_n(n, 0);
    for (int x : *in.N) in_n[x] = 1;
    std::vector<int> reps;
    {
      std::vector<char> seen(n, 0);
      for (int u = 0; u < n; ++u) {
        if (seen[u]) continue;
        int least = n;
        for (int x : *in.N) {
          int y = A.mul(x, u);
          seen[y] = 1;
          least = std::min(least, y);
        }
        reps.push_back(least);
      }
      std::sort(reps.begin(), reps.end());
    }
    cands_.assign(in.k_gens.size(), {});
    for (std::size_t i = 0; i < in.k_gens.size(); ++i) {
      int alpha = in.k_gens[i];
      int ord = aut.element_order(alpha);
      for (int u : reps) {
        // Normality of the kernel: u alpha(N) u^-1 = N.
        bool normal = true;
        for (int x : *in.N) {
          if (!in_n[A.mul(A.mul(u, aut.apply(alpha, x)), A.inv(u))]) {
            normal = false;
            break;
          }
        }
        if (!normal) continue;
        // (u, alpha)^ord(alpha) must fall into N x {1}.
        if (!in_n[hol_.pi1(hol_.power(hol_.pack(u, alpha), ord))]) continue;
        cands_[i].push_back(u);
      }
      if (cands_[i].empty()) return;
    }
    sc_.reset();
    for (int x : in.n_gens) {
      if (!sc_.extend(hol_.pack(x, 0), n)) {
        throw ConsistencyError("kernel subgroup is not semiregular");
      }
    }
    in_ = &in;
    chosen_.clear();
    descend(0, out);
  }

 private:
  bool bound_covers(int last_u, int last_alpha) {
    std::vector<Packed> gens;
    for (int x : in_->n_gens) gens.push_back(hol_.pack(x, 0));
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      gens.push_back(hol_.pack(chosen_[i], in_->k_gens[i]));
    }
    gens.push_back(hol_.pack(last_u, last_alpha));
    return static_cast<int>(pi1_closure_bound(hol_, gens).bound.size()) ==
           hol_.n();
  }

  void descend(std::size_t i, std::vector<HolSubgroup>& out) {
    const std::size_t n = hol_.n();
    if (i == in_->k_gens.size()) {
      if (sc_.elements().size() == n) {
        out.push_back(sorted_subgroup(sc_.elements()));
      }
      return;
    }
    std::vector<Packed> elems = sc_.elements();
    std::vector<Packed> gens = sc_.generators();
    int alpha = in_->k_gens[i];
    bool last = i + 1 == in_->k_gens.size();
    for (int u : cands_[i]) {
      if (last && !bound_covers(u, alpha)) continue;
      if (sc_.extend(hol_.pack(u, alpha), n) && n % sc_.elements().size() == 0) {
        chosen_.push_back(u);
        descend(i + 1, out);
        chosen_.pop_back();
      }
      sc_.assign(elems, gens);
    }
  }

  const Holomorph& hol_;
  SemiregularClosure sc_;
  const StratumInput* in_ = nullptr;
  std::vector<std::vector<int>> cands_;
  std::vector<int> chosen_;
};

}  // namespace

std::vector<HolSubgroup> enumerate_stratified(const Holomorph& hol,
                                              const EnumerateOptions& opts) {
  check_order(hol, opts);
  const AutGroup& aut = hol.auts();
  if (aut.size() > opts.max_aut_stratified) {
    throw SizeError("|Aut(A)| = " + std::to_string(aut.size()) +
                    " exceeds the stratified subgroup budget " +
                    std::to_string(opts.max_aut_stratified));
  }
  const int n = hol.n();
  auto k_reps = class_representatives(aut, aut_subgroups_dividing(aut, n));
  auto a_subs = all_subgroups(hol.base());
  std::vector<StratumInput> units;
  for (const auto& K : k_reps) {
    auto k_gens = small_generating_set(aut, K);
    for (const auto& N : a_subs) {
      if (N.size() * K.size() != static_cast<std::size_t>(n)) continue;
      units.push_back({&K, k_gens, &N, search_generators_of(hol.base(), N)});
    }
  }
  std::vector<std::vector<HolSubgroup>> found(units.size());
  std::vector<std::unique_ptr<LiftSearch>> workers;
  for (int w = 0; w < std::max(1, opts.jobs); ++w) {
    workers.push_back(std::make_unique<LiftSearch>(hol));
  }
  parallel_for(opts.jobs, units.size(), [&](std::size_t i, int w) {
    workers[w]->run(units[i], found[i]);
  });
  // Spread each stratum representative over its Aut(A)-conjugates.
  std::vector<HolSubgroup> seeds;
  for (auto& part : found) {
    for (auto& s : part) seeds.push_back(std::move(s));
  }
  std::vector<std::vector<HolSubgroup>> spread(seeds.size());
  parallel_for(opts.jobs, seeds.size(), [&](std::size_t i, int) {
    std::unordered_set<HolSubgroup, HolSubgroupHash> orbit{seeds[i]};
    std::vector<HolSubgroup> queue{seeds[i]};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (int h : aut.generators()) {
        auto c = conjugate(hol, h, queue[qi]);
        if (orbit.insert(c).second) queue.push_back(std::move(c));
      }
    }
    spread[i] = std::move(queue);
  });
  return merge_sorted(std::move(spread));
}

std::vector<HolSubgroup> enumerate(const Holomorph& hol, Strategy strategy,
                                   const EnumerateOptions& opts) {
  return strategy == Strategy::kDfs ? enumerate_dfs(hol, opts)
                                    : enumerate_stratified(hol, opts);
}

// --- orbits ---------------------------------------------------------------------

std::vector<Packed> subgroup_generators(const Holomorph& hol,
                                        const HolSubgroup& s) {
  SemiregularClosure sc(hol);
  std::vector<Packed> gens;
  for (Packed x : s.elements) {
    if (sc.covers(hol.pi1(x)) && sc.owner(hol.pi1(x)) == static_cast<int>(hol.pi2(x))) {
      continue;
    }
    if (!sc.extend(x, s.size())) {
      throw DomainError("subgroup_generators needs injective pi_1");
    }
    gens.push_back(x);
    if (sc.elements().size() == s.size()) break;
  }
  return gens;
}

OrbitPartition orbit_partition(const Holomorph& hol,
                               const std::vector<HolSubgroup>& regulars) {
  std::unordered_map<HolSubgroup, std::size_t, HolSubgroupHash> index;
  index.reserve(regulars.size() * 2);
  for (std::size_t i = 0; i < regulars.size(); ++i) {
    if (!index.emplace(regulars[i], i).second) {
      throw DomainError("orbit_partition input contains duplicates");
    }
  }
  OrbitPartition out;
  out.orbit_of.assign(regulars.size(), -1);
  const AutGroup& aut = hol.auts();
  for (std::size_t i = 0; i < regulars.size(); ++i) {
    if (out.orbit_of[i] >= 0) continue;
    int id = static_cast<int>(out.orbits.size());
    OrbitClass oc;
    oc.members.push_back(i);
    out.orbit_of[i] = id;
    for (std::size_t qi = 0; qi < oc.members.size(); ++qi) {
      for (int h : aut.generators()) {
        auto c = conjugate(hol, h, regulars[oc.members[qi]]);
        auto it = index.find(c);
        if (it == index.end()) {
          throw ConsistencyError("subgroup list not closed under conjugation");
        }
        if (out.orbit_of[it->second] < 0) {
          out.orbit_of[it->second] = id;
          oc.members.push_back(it->second);
        }
      }
    }
    std::sort(oc.members.begin(), oc.members.end());
    std::size_t least = oc.members[0];
    for (std::size_t j : oc.members) {
      if (regulars[j] < regulars[least]) least = j;
    }
    oc.representative = regulars[least];
    oc.orbit_size = oc.members.size();
    oc.pi2_size = static_cast<int>(pi2_image(hol, oc.representative).size());
    oc.generators = subgroup_generators(hol, oc.representative);
    out.orbits.push_back(std::move(oc));
  }
  // Order orbits by representative.
  std::vector<std::size_t> perm(out.orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return out.orbits[a].representative < out.orbits[b].representative;
  });
  std::vector<int> new_id(perm.size());
  std::vector<OrbitClass> sorted;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    new_id[perm[k]] = static_cast<int>(k);
    sorted.push_back(std::move(out.orbits[perm[k]]));
  }
  for (int& o : out.orbit_of) o = new_id[o];
  out.orbits = std::move(sorted);
  return out;
}

CrossValidation cross_validate(const Holomorph& hol,
                               const EnumerateOptions& opts) {
  auto dfs = enumerate_dfs(hol, opts);
  auto strat = enumerate_stratified(hol, opts);
  CrossValidation cv;
  cv.dfs_count = dfs.size();
  cv.stratified_count = strat.size();
  cv.equal = dfs == strat;
  if (!cv.equal) {
    std::vector<HolSubgroup> only_dfs, only_strat;
    std::set_difference(dfs.begin(), dfs.end(), strat.begin(), strat.end(),
                        std::back_inserter(only_dfs));
    std::set_difference(strat.begin(), strat.end(), dfs.begin(), dfs.end(),
                        std::back_inserter(only_strat));
    const HolSubgroup* first = nullptr;
    const char* where = "";
    if (!only_dfs.empty() &&
        (only_strat.empty() || only_dfs.front() < only_strat.front())) {
      first = &only_dfs.front();
      where = "only dfs";
    } else if (!only_strat.empty()) {
      first = &only_strat.front();
      where = "only stratified";
    }
    std::ostringstream os;
    os << only_dfs.size() << " subgroups only in dfs, " << only_strat.size()
       << " only in stratified";
    if (first) {
      os << "; first (" << where << "): <";
      auto gens = subgroup_generators(hol, *first);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto e = hol.unpack(gens[i]);
        os << (i ? ", " : "") << "(" << e.a << "," << e.f << ")";
      }
      os << ">";
    }
    cv.divergence = os.str();
  } else {
    cv.orbit_count = orbit_partition(hol, dfs).orbits.size();
  }
  return cv;
}

}  // namespace skewbrace
