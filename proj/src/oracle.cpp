// Copyright 2026 The ella Authors
//
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

#include "ella/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ella/guards.hpp"
#include "ella/rules.hpp"

namespace ella {

namespace {

using Members = std::vector<char>;  // index v-1; 1 = IN

Members members_of(const GlobalState& s) {
  Members in(s.size());
  for (std::size_t v = 0; v < s.size(); ++v) in[v] = s.values()[v].is_in() ? 1 : 0;
  return in;
}

// The per-node clause of the problem's feasibility predicate.
bool clause_ok(const Problem& p, const Members& in, NodeId q) {
  const Graph& g = p.graph();
  const auto nb = g.neighbors(q);
  const bool self = in[q - 1] != 0;
  switch (p.algorithm()) {
    case Algorithm::kSdmds: {
      if (self) return true;
      const SdmdsInstance& inst = p.instance();
      for (Token d : inst.demands_of(q)) {
        const bool served = std::any_of(nb.begin(), nb.end(), [&](NodeId j) {
          return in[j - 1] != 0 && inst.services_of(j).contains(d);
        });
        if (!served) return false;
      }
      return true;
    }
    case Algorithm::kMvc:
      return self || std::all_of(nb.begin(), nb.end(), [&](NodeId j) { return in[j - 1] != 0; });
    case Algorithm::kMis:
      return !self || std::none_of(nb.begin(), nb.end(), [&](NodeId j) { return in[j - 1] != 0; });
    case Algorithm::kTwoDs:
      return self || std::any_of(nb.begin(), nb.end(), [&](NodeId j) { return in[j - 1] != 0; });
    case Algorithm::kGc:
      break;
  }
  return false;
}

// Clauses of every node in N[v] for each v in `changed`.
bool clauses_ok_around(const Problem& p, const Members& in, std::initializer_list<NodeId> changed) {
  for (NodeId v : changed) {
    if (!clause_ok(p, in, v)) return false;
    for (NodeId q : p.graph().neighbors(v)) {
      if (!clause_ok(p, in, q)) return false;
    }
  }
  return true;
}

std::optional<NodeId> first_violation(const Problem& p, const GlobalState& s) {
  const Graph& g = p.graph();
  if (p.colours()) {
    for (NodeId v = 1; v <= g.node_count(); ++v) {
      if (s[v].colour() < 1) return v;
      for (NodeId j : g.neighbors(v)) {
        if (s[j].colour() == s[v].colour()) return v;
      }
    }
    return std::nullopt;
  }
  const Members in = members_of(s);
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (!clause_ok(p, in, v)) return v;
  }
  return std::nullopt;
}

void require_sdmds(const Problem& p, const char* what) {
  if (p.algorithm() != Algorithm::kSdmds) {
    throw std::invalid_argument(std::string(what) + " is defined for the dominating-set problem only");
  }
  if (p.node_count() > kMaxRankNodes) {
    throw OracleSizeError(std::string(what) + " needs n <= " + std::to_string(kMaxRankNodes));
  }
}

bool feasible_mask(const Problem& p, std::uint32_t mask) {
  const std::size_t n = p.node_count();
  Members in(n);
  for (std::size_t v = 0; v < n; ++v) in[v] = (mask >> v) & 1u;
  for (NodeId v = 1; v <= n; ++v) {
    if (!clause_ok(p, in, v)) return false;
  }
  return true;
}

std::uint32_t mask_of(const GlobalState& s) {
  std::uint32_t mask = 0;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (s.values()[v].is_in()) mask |= 1u << v;
  }
  return mask;
}

}  // namespace

bool check_feasible(const Problem& p, const GlobalState& s) { return !first_violation(p, s).has_value(); }

Verdict check_optimal(const Problem& p, const GlobalState& s) {
  Verdict verdict;
  if (auto bad = first_violation(p, s)) {
    verdict.witness = {*bad};
    return verdict;
  }
  verdict.feasible = true;
  const Graph& g = p.graph();
  const std::size_t n = g.node_count();

  if (p.colours()) {
    std::vector<Colour> used;
    for (NodeId v = 1; v <= n; ++v) {
      used.clear();
      for (NodeId j : g.neighbors(v)) used.push_back(s[j].colour());
      std::sort(used.begin(), used.end());
      for (Colour c = 1; c < s[v].colour(); ++c) {
        if (!std::binary_search(used.begin(), used.end(), c)) {
          verdict.witness = {v};
          return verdict;
        }
      }
    }
    verdict.optimal = true;
    return verdict;
  }

  Members in = members_of(s);
  if (p.algorithm() == Algorithm::kMis) {
    for (NodeId v = 1; v <= n; ++v) {
      if (in[v - 1]) continue;
      in[v - 1] = 1;
      const bool still = clauses_ok_around(p, in, {v});
      in[v - 1] = 0;
      if (still) {
        verdict.witness = {v};
        return verdict;
      }
    }
    verdict.optimal = true;
    return verdict;
  }

  // Minimality: no single member can leave. Scanning down reports the
  // highest-ID removable node, which the ID tie-break would let move.
  for (NodeId v = n; v >= 1; --v) {
    if (!in[v - 1]) continue;
    in[v - 1] = 0;
    const bool still = clauses_ok_around(p, in, {v});
    in[v - 1] = 1;
    if (still) {
      verdict.witness = {v};
      return verdict;
    }
  }

  if (p.algorithm() == Algorithm::kTwoDs) {
    std::vector<NodeId> members;
    for (NodeId i = 1; i <= n; ++i) {
      if (in[i - 1]) continue;
      members.clear();
      for (NodeId j : g.neighbors(i)) {
        if (in[j - 1]) members.push_back(j);
      }
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const NodeId j = members[a];
          const NodeId k = members[b];
          in[i - 1] = 1;
          in[j - 1] = 0;
          in[k - 1] = 0;
          const bool still = clauses_ok_around(p, in, {j, k});
          in[i - 1] = 0;
          in[j - 1] = 1;
          in[k - 1] = 1;
          if (still) {
            verdict.witness = {i, j, k};
            return verdict;
          }
        }
      }
    }
  }
  verdict.optimal = true;
  return verdict;
}

std::uint64_t rank(const Problem& p, const GlobalState& s) {
  require_sdmds(p, "rank");
  const std::size_t n = p.node_count();
  const std::uint32_t base = mask_of(s);
  const std::uint32_t outside = ((n == 32 ? 0u : (1u << n)) - 1u) & ~base;
  std::uint64_t best = n + 1;
  for (std::uint32_t add = outside;; add = (add - 1) & outside) {
    const auto size = static_cast<std::uint64_t>(std::popcount(add));
    if (size < best && feasible_mask(p, base | add)) best = size;
    if (add == 0) break;
  }
  return best;
}

std::uint64_t badness(const Problem& p, const GlobalState& s) {
  require_sdmds(p, "badness");
  if (!check_feasible(p, s)) throw std::invalid_argument("badness is defined for feasible states only");
  const std::uint32_t base = mask_of(s);
  std::uint64_t best = 0;
  for (std::uint32_t drop = base;; drop = (drop - 1) & base) {
    const auto size = static_cast<std::uint64_t>(std::popcount(drop));
    if (size > best && feasible_mask(p, base & ~drop)) best = size;
    if (drop == 0) break;
  }
  return best;
}

BoundCheck check_bounds(const Problem& p, const Trace& trace) {
  const std::uint64_t n = p.node_count();
  const std::uint64_t m = p.graph().edge_count();
  BoundCheck check;
  check.moves = trace.moves;
  check.moves_after_first_round = trace.moves_after_first_round;
  switch (p.algorithm()) {
    case Algorithm::kSdmds:
    case Algorithm::kMvc:
    case Algorithm::kMis:
      check.limit = 2 * n;
      check.limit_after_first_round = n;
      break;
    case Algorithm::kGc:
      check.limit = n + 4 * m;
      break;
    case Algorithm::kTwoDs:
      check.limit = 3 * n;
      check.limit_after_first_round = 2 * n;
      break;
  }
  std::ostringstream msg;
  msg << "moves " << check.moves << " <= " << check.limit;
  if (check.moves > check.limit) {
    check.ok = false;
    msg << " FAILED";
  }
  if (check.limit_after_first_round) {
    msg << "; after first round " << check.moves_after_first_round << " <= " << *check.limit_after_first_round;
    if (check.moves_after_first_round > *check.limit_after_first_round) {
      check.ok = false;
      msg << " FAILED";
    }
  }
  check.message = msg.str();
  return check;
}

// --- state-space exploration ----------------------------------------------

namespace {

void require_small(const Problem& p) {
  if (p.node_count() > kMaxLatticeNodes) {
    throw OracleSizeError("exhaustive state-space checks need n <= " + std::to_string(kMaxLatticeNodes) +
                          " (got " + std::to_string(p.node_count()) + ")");
  }
}

Colour colour_cap(const Problem& p) { return static_cast<Colour>(2 * p.node_count()); }

// Mixed-radix key; colours above the cap do not occur in F2 successors.
std::uint64_t key_of(const Problem& p, const GlobalState& s) {
  const std::uint64_t radix = p.colours() ? static_cast<std::uint64_t>(colour_cap(p)) : 2;
  std::uint64_t key = 0;
  for (std::size_t v = s.size(); v-- > 0;) {
    const LocalState x = s.values()[v];
    key = key * radix + (p.colours() ? static_cast<std::uint64_t>(x.colour() - 1) : (x.is_in() ? 1 : 0));
  }
  return key;
}

struct StateInfo {
  bool feasible = false;
  bool optimal = false;
  bool f1_enabled = false;
  std::vector<NodeId> enabled;         // F2
  std::vector<GlobalState> successors;  // aligned with enabled
};

StateInfo classify(const Problem& p, const GlobalState& s, GuardMemo& memo) {
  StateInfo info;
  const Verdict v = check_optimal(p, s);
  info.feasible = v.feasible;
  info.optimal = v.optimal;
  memo.reset(p.node_count());
  GuardEvaluator ev(p, StateView(s), memo);
  const RuleSet& rules = rules_for(p.algorithm());
  for (NodeId i = 1; i <= p.node_count(); ++i) {
    if (ev.f1(i)) info.f1_enabled = true;
    if (!ev.f2(i)) continue;
    info.enabled.push_back(i);
    Decision d;
    d.rule = RuleId::kF2;
    rules.rules[1].action(ev, i, d);
    GlobalState next = s;
    for (const Write& w : d.span()) next[w.node] = w.value;
    info.successors.push_back(std::move(next));
  }
  return info;
}

std::vector<StateInfo> classify_all(const Problem& p, const std::vector<GlobalState>& states, Exec exec) {
  std::vector<StateInfo> infos(states.size());
  const auto count = static_cast<std::ptrdiff_t>(states.size());
  std::exception_ptr error;
#pragma omp parallel if (exec == Exec::kParallel)
  {
    GuardMemo memo;
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      try {
        infos[static_cast<std::size_t>(k)] = classify(p, states[static_cast<std::size_t>(k)], memo);
      } catch (...) {
#pragma omp critical(ella_oracle_error)
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return infos;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<GlobalState> enumerate_states(const Problem& p) {
  require_small(p);
  const std::size_t n = p.node_count();
  std::vector<GlobalState> states;
  if (!p.colours()) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<LocalState> values(n);
      for (std::size_t v = 0; v < n; ++v) values[v] = (mask >> v) & 1u ? LocalState::in() : LocalState::out();
      states.emplace_back(std::move(values));
    }
    return states;
  }
  const Colour cap = colour_cap(p);
  std::vector<Colour> digits(n, 1);
  while (true) {
    std::vector<LocalState> values(n);
    for (std::size_t v = 0; v < n; ++v) values[v] = LocalState::colour(digits[v]);
    states.emplace_back(std::move(values));
    std::size_t v = 0;
    while (v < n && digits[v] == cap) digits[v++] = 1;
    if (v == n) break;
    ++digits[v];
  }
  return states;
}

LatticeDecomposition enumerate_lattices(const Problem& p, Exec exec) {
  const auto states = enumerate_states(p);
  const auto infos = classify_all(p, states, exec);
  LatticeDecomposition d;
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (infos[k].feasible) {
      index.emplace(key_of(p, states[k]), d.feasible.size());
      d.feasible.push_back(states[k]);
    } else {
      d.infeasible.push_back(states[k]);
    }
  }
  std::vector<std::size_t> parent(d.feasible.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> has_out(d.feasible.size(), 0);
  std::size_t from = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!infos[k].feasible) continue;
    for (const GlobalState& next : infos[k].successors) {
      const auto it = index.find(key_of(p, next));
      if (it == index.end()) continue;  // left the feasible region
      d.edges.emplace_back(from, it->second);
      has_out[from] = 1;
      parent[find_root(parent, from)] = find_root(parent, it->second);
    }
    ++from;
  }
  std::unordered_map<std::size_t, std::size_t> component_of_root;
  for (std::size_t k = 0; k < d.feasible.size(); ++k) {
    const std::size_t root = find_root(parent, k);
    auto [it, inserted] = component_of_root.emplace(root, d.components.size());
    if (inserted) {
      d.components.emplace_back();
      d.suprema.emplace_back();
    }
    d.components[it->second].push_back(k);
    if (!has_out[k]) d.suprema[it->second].push_back(k);
  }
  return d;
}

LatticeReport check_lattice_linearity(const Problem& p, Exec exec) {
  const auto states = enumerate_states(p);
  const auto infos = classify_all(p, states, exec);
  LatticeReport report;
  auto fail = [&](const GlobalState& s, std::string why) {
    if (!report.pass) return;
    report.pass = false;
    report.counterexample = s;
    report.reason = std::move(why) + " at " + format_state(s, p.colours());
  };

  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < states.size(); ++k) index.emplace(key_of(p, states[k]), k);

  std::vector<std::vector<std::size_t>> next(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const StateInfo& info = infos[k];
    if (!info.feasible) continue;
    ++report.feasible_states;
    if (!info.optimal) ++report.suboptimal_states;
    if (info.f1_enabled) fail(states[k], "first rule enabled in a feasible state");
    if (!info.optimal && info.enabled.empty()) fail(states[k], "feasible non-optimal state with no enabled node");
    for (std::size_t e = 0; e < info.enabled.size(); ++e) {
      const auto it = index.find(key_of(p, info.successors[e]));
      if (it == index.end() || !infos[it->second].feasible) {
        fail(states[k], "move of node " + std::to_string(info.enabled[e]) + " leaves the feasible region");
        continue;
      }
      next[k].push_back(it->second);
      // Every other enabled node must still be enabled after this move.
      const auto& after = infos[it->second].enabled;
      for (NodeId other : info.enabled) {
        if (other == info.enabled[e]) continue;
        if (!std::binary_search(after.begin(), after.end(), other)) {
          fail(states[k], "node " + std::to_string(other) + " disabled by the move of node " +
                              std::to_string(info.enabled[e]));
        }
      }
    }
  }

  // Paths must be finite: the transition graph restricted to feasible states
  // has no cycle.
  std::vector<std::size_t> indegree(states.size(), 0);
  for (const auto& out : next) {
    for (std::size_t t : out) ++indegree[t];
  }
  std::vector<std::size_t> ready;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (infos[k].feasible && indegree[k] == 0) ready.push_back(k);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t k = ready.back();
    ready.pop_back();
    ++visited;
    for (std::size_t t : next[k]) {
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  if (visited != report.feasible_states) {
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (infos[k].feasible && indegree[k] != 0) {
        fail(states[k], "cycle of second-rule moves");
        break;
      }
    }
  }
  return report;
}

std::string lattice_to_dot(const Problem& p, const LatticeDecomposition& d) {
  std::ostringstream out;
  out << "digraph lattice {\n  node [shape=record];\n";
  std::vector<char> supremum(d.feasible.size(), 0);
  for (const auto& sup : d.suprema) {
    for (std::size_t k : sup) supremum[k] = 1;
  }
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    for (std::size_t k : d.components[c]) {
      std::string label = format_state(d.feasible[k], p.colours());
      label = label.substr(1, label.size() - 2);
      std::replace(label.begin(), label.end(), ',', '|');
      out << "    s" << k << " [label=\"{" << label << "}\"" << (supremum[k] ? ", peripheries=2" : "") << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& [a, b] : d.edges) out << "  s" << a << " -> s" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ella
