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

#ifndef ELLA_ORACLE_HPP_
#define ELLA_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ella/engine.hpp"
#include "ella/kernels.hpp"
#include "ella/problem.hpp"
#include "ella/state.hpp"

namespace ella {

/// Raised when an exhaustive check is asked to handle too large an input.
class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxRankNodes = 16;
inline constexpr std::size_t kMaxLatticeNodes = 5;

struct Verdict {
  bool feasible = false;
  bool optimal = false;
  /// A node violating feasibility or optimality; (i, j, k) for a 2DS swap.
  std::vector<NodeId> witness;
};

/// The problem's feasibility predicate evaluated directly on s.
bool check_feasible(const Problem& p, const GlobalState& s);

/// Feasibility plus the problem's optimality predicate, with a witness when
/// either fails. A removable witness is the highest-ID one.
Verdict check_optimal(const Problem& p, const GlobalState& s);

/// Fewest OUT nodes whose addition makes s feasible (SDMDS). n <= 16.
std::uint64_t rank(const Problem& p, const GlobalState& s);

/// Most IN nodes removable while staying feasible (SDMDS). Requires a
/// feasible s; n <= 16.
std::uint64_t badness(const Problem& p, const GlobalState& s);

struct BoundCheck {
  bool ok = true;
  std::uint64_t moves = 0;
  std::uint64_t limit = 0;
  std::uint64_t moves_after_first_round = 0;
  std::optional<std::uint64_t> limit_after_first_round;
  std::string message;
};

/// Move limits: 2n (SDMDS, MVC, MIS), n + 4m (GC), 3n (2DS); after the first
/// round: n, n, n, none, 2n.
BoundCheck check_bounds(const Problem& p, const Trace& trace);

/// Every state of the problem's state space for exhaustive checks: all
/// memberships, or colours in [1, 2n] for colouring. n <= 5.
std::vector<GlobalState> enumerate_states(const Problem& p);

struct LatticeDecomposition {
  std::vector<GlobalState> feasible;
  std::vector<GlobalState> infeasible;
  /// Single-node F2 transitions between feasible states (indices into feasible).
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Weakly connected components of the transition graph, each ascending.
  std::vector<std::vector<std::size_t>> components;
  /// Per component: its states with no outgoing transition.
  std::vector<std::vector<std::size_t>> suprema;
};

LatticeDecomposition enumerate_lattices(const Problem& p, Exec exec = Exec::kSerial);

struct LatticeReport {
  bool pass = true;
  std::size_t feasible_states = 0;
  std::size_t suboptimal_states = 0;
  std::optional<GlobalState> counterexample;
  std::string reason;
};

/// Over the whole state space: F1 disabled on feasible states; every
/// feasible non-optimal state has an F2-enabled node; F2 moves stay feasible;
/// F2 paths are finite and end in optimal states; an F2-enabled node stays
/// enabled while other nodes take F2 moves.
LatticeReport check_lattice_linearity(const Problem& p, Exec exec = Exec::kSerial);

/// Graphviz rendering: one record per feasible state, F2 moves as edges,
/// suprema double-circled.
std::string lattice_to_dot(const Problem& p, const LatticeDecomposition& d);

}  // namespace ella

#endif  // ELLA_ORACLE_HPP_
