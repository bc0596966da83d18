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

#ifndef ELLA_ENGINE_HPP_
#define ELLA_ENGINE_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ella/kernels.hpp"
#include "ella/problem.hpp"
#include "ella/random.hpp"
#include "ella/rules.hpp"
#include "ella/state.hpp"

namespace ella {

/// Per-node append-only log of written values. Version 0 is the initial
/// state; every write appends one version.
class History {
 public:
  History() = default;
  explicit History(const GlobalState& init);

  std::uint64_t latest(NodeId v) const { return entries_[v - 1].size() - 1; }
  LocalState at(NodeId v, std::uint64_t version) const { return entries_[v - 1].at(version); }
  const GlobalState& current() const noexcept { return current_; }
  /// Returns true when the value differs from the previous one.
  bool append(NodeId v, LocalState s);

 private:
  std::vector<std::vector<LocalState>> entries_;
  GlobalState current_;
};

/// Monotonic read cursors: for each reader i and each subject j in i's read
/// set, the newest version of j that i has seen.
class ViewTable {
 public:
  ViewTable() = default;
  explicit ViewTable(const Problem& p);

  std::span<const NodeId> read_set(NodeId i) const {
    return {subjects_.data() + offsets_[i - 1], subjects_.data() + offsets_[i]};
  }
  std::span<std::uint64_t> cursors(NodeId i) {
    return {cursors_.data() + offsets_[i - 1], cursors_.data() + offsets_[i]};
  }
  std::span<const std::uint64_t> cursors(NodeId i) const {
    return {cursors_.data() + offsets_[i - 1], cursors_.data() + offsets_[i]};
  }
  /// Every cursor of reader i is at the subject's latest version.
  bool caught_up(NodeId i, const History& h) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> subjects_;
  std::vector<std::uint64_t> cursors_;
};

/// Fills `buffer` (size n, all unknown outside the read set) with i's view:
/// i's own state is fresh, every subject j gets a version drawn uniformly from
/// [max(cursor, latest - B), latest]. Cursors advance to the returned
/// versions, which are also written to `versions` when non-null.
void snapshot_into(const History& h, ViewTable& views, NodeId i, unsigned staleness, Rng& rng,
                   std::vector<LocalState>& buffer, std::vector<std::uint64_t>* versions = nullptr);

/// Same, returning a fresh partial state (unknown outside the read set).
GlobalState snapshot_for(const History& h, ViewTable& views, NodeId i, unsigned staleness, Rng& rng,
                         std::vector<std::uint64_t>* versions = nullptr);

enum class SchedulerKind { kCentral, kDistributed, kSync, kAmr };

std::string_view scheduler_name(SchedulerKind k);
/// "central", "distributed", "sync" (or "synchronous"), "amr".
SchedulerKind parse_scheduler(std::string_view name);

struct SchedulerConfig {
  SchedulerKind kind = SchedulerKind::kSync;
  unsigned staleness = 0;  // amr only
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 0;  // 0 selects default_max_steps
  Exec exec = Exec::kSerial;
};

/// 10(2n + 4m + 10) steps, times n for the central scheduler.
std::uint64_t default_max_steps(const Problem& p, SchedulerKind kind);

struct StepRecord {
  std::uint64_t step = 0;
  std::vector<NodeId> nodes;
  std::vector<RuleId> rules;  // aligned with nodes
  /// Versions read per activated node, aligned with the read set. Empty when
  /// the step used exact reads.
  std::vector<std::vector<std::uint64_t>> versions;
  std::vector<Write> writes;  // in commit order
};

struct Trace {
  std::vector<StepRecord> steps;  // filled only when recording
  std::uint64_t moves = 0;
  std::uint64_t moves_after_first_round = 0;
  std::uint64_t rounds = 0;
  std::uint64_t activations = 0;
  std::uint64_t step_count = 0;
  bool converged = false;
  GlobalState final_state;
};

/// Thrown when the step budget runs out; carries the partial trace.
class NonTerminationError : public std::runtime_error {
 public:
  NonTerminationError(const std::string& what, Trace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const Trace& trace() const noexcept { return trace_; }

 private:
  Trace trace_;
};

struct ActivationResult {
  RuleId rule = RuleId::kNone;
  bool changed = false;
};

/// One activation of node i outside any scheduler: snapshot, guards, commit.
ActivationResult activate(const Problem& p, History& h, ViewTable& views, NodeId i, unsigned staleness,
                          Rng& rng);

/// One execution under a scheduler. Deterministic in (problem, init, cfg).
class Simulation {
 public:
  Simulation(Problem problem, const GlobalState& init, SchedulerConfig cfg, bool record = false);

  /// Runs one scheduler step. Returns true once the run has converged.
  bool step();
  /// Runs one step with an explicit activation set (ascending, distinct).
  /// Reads follow the configured scheduler kind.
  void step_with(std::span<const NodeId> nodes);
  /// Steps until convergence; throws NonTerminationError past max_steps.
  const Trace& run();

  bool converged() const noexcept { return trace_.converged; }
  const GlobalState& state() const noexcept { return history_.current(); }
  const History& history() const noexcept { return history_; }
  const ViewTable& views() const noexcept { return views_; }
  const Trace& trace() const noexcept { return trace_; }
  const Problem& problem() const noexcept { return problem_; }
  /// Every reader's cursors are at the latest versions.
  bool views_caught_up() const;

 private:
  std::vector<NodeId> pick();
  void execute(std::span<const NodeId> nodes);
  bool stale_reads() const { return cfg_.kind == SchedulerKind::kAmr && cfg_.staleness > 0; }

  Problem problem_;
  SchedulerConfig cfg_;
  bool record_;
  std::uint64_t max_steps_;
  History history_;
  ViewTable views_;
  Rng scheduler_rng_;
  Trace trace_;

  std::vector<Workspace> workspaces_;
  bool memo_valid_ = false;
  std::vector<Decision> decisions_;
  std::vector<std::vector<std::uint64_t>> versions_;

  // Round and convergence bookkeeping.
  std::vector<std::uint64_t> round_seen_;
  std::uint64_t round_epoch_ = 1;
  std::size_t round_pending_ = 0;
  std::uint64_t round_start_step_ = 0;
  std::vector<std::uint64_t> quiet_;
  std::uint64_t change_epoch_ = 1;
  std::size_t quiet_count_ = 0;
};

/// Runs to convergence. Throws NonTerminationError past max_steps and
/// std::logic_error if the converged state is not silent.
Trace run(const Problem& p, const GlobalState& init, const SchedulerConfig& cfg, bool record = false);

}  // namespace ella

#endif  // ELLA_ENGINE_HPP_
