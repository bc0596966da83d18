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

#include "ella/engine.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

#include "ella/check.hpp"

namespace ella {

// --- History / ViewTable ---------------------------------------------------

History::History(const GlobalState& init) : current_(init) {
  entries_.reserve(init.size());
  for (LocalState s : init.values()) entries_.push_back({s});
}

bool History::append(NodeId v, LocalState s) {
  const bool changed = current_[v] != s;
  entries_[v - 1].push_back(s);
  current_[v] = s;
  return changed;
}

ViewTable::ViewTable(const Problem& p) {
  offsets_.reserve(p.node_count() + 1);
  for (NodeId i = 1; i <= p.node_count(); ++i) {
    const auto rs = p.read_set(i);
    subjects_.insert(subjects_.end(), rs.begin(), rs.end());
    offsets_.push_back(subjects_.size());
  }
  cursors_.assign(subjects_.size(), 0);
}

bool ViewTable::caught_up(NodeId i, const History& h) const {
  const auto subjects = read_set(i);
  const auto cur = cursors(i);
  for (std::size_t k = 0; k < subjects.size(); ++k) {
    if (cur[k] != h.latest(subjects[k])) return false;
  }
  return true;
}

namespace {

// Returns true when every returned version is the latest.
bool fill_snapshot(const History& h, ViewTable& views, NodeId i, unsigned staleness, Rng& rng,
                   std::vector<LocalState>& buffer, std::vector<std::uint64_t>* versions) {
  const std::size_t n = h.current().size();
  if (buffer.size() != n) buffer.assign(n, LocalState::unknown());
  buffer[i - 1] = h.current()[i];
  const auto subjects = views.read_set(i);
  const auto cur = views.cursors(i);
  if (versions != nullptr) versions->assign(subjects.size(), 0);
  bool fresh = true;
  for (std::size_t k = 0; k < subjects.size(); ++k) {
    const NodeId j = subjects[k];
    const std::uint64_t latest = h.latest(j);
    const std::uint64_t floor = latest >= staleness ? latest - staleness : 0;
    const std::uint64_t lo = std::max(cur[k], floor);
    const std::uint64_t v = lo >= latest ? latest : rng.between(lo, latest);
    cur[k] = v;
    buffer[j - 1] = h.at(j, v);
    if (v != latest) fresh = false;
    if (versions != nullptr) (*versions)[k] = v;
  }
  return fresh;
}

void clear_snapshot(const ViewTable& views, NodeId i, std::vector<LocalState>& buffer) {
  buffer[i - 1] = LocalState::unknown();
  for (NodeId j : views.read_set(i)) buffer[j - 1] = LocalState::unknown();
}

}  // namespace

void snapshot_into(const History& h, ViewTable& views, NodeId i, unsigned staleness, Rng& rng,
                   std::vector<LocalState>& buffer, std::vector<std::uint64_t>* versions) {
  const std::size_t n = h.current().size();
  if (buffer.size() != n) buffer.assign(n, LocalState::unknown());
  clear_snapshot(views, i, buffer);
  fill_snapshot(h, views, i, staleness, rng, buffer, versions);
}

GlobalState snapshot_for(const History& h, ViewTable& views, NodeId i, unsigned staleness, Rng& rng,
                         std::vector<std::uint64_t>* versions) {
  std::vector<LocalState> buffer(h.current().size(), LocalState::unknown());
  fill_snapshot(h, views, i, staleness, rng, buffer, versions);
  return GlobalState(std::move(buffer));
}

// --- configuration ---------------------------------------------------------

std::string_view scheduler_name(SchedulerKind k) {
  switch (k) {
    case SchedulerKind::kCentral: return "central";
    case SchedulerKind::kDistributed: return "distributed";
    case SchedulerKind::kSync: return "sync";
    case SchedulerKind::kAmr: return "amr";
  }
  return "?";
}

SchedulerKind parse_scheduler(std::string_view name) {
  if (name == "central") return SchedulerKind::kCentral;
  if (name == "distributed") return SchedulerKind::kDistributed;
  if (name == "sync" || name == "synchronous") return SchedulerKind::kSync;
  if (name == "amr") return SchedulerKind::kAmr;
  throw std::invalid_argument("unknown scheduler \"" + std::string(name) + "\"");
}

std::uint64_t default_max_steps(const Problem& p, SchedulerKind kind) {
  const std::uint64_t n = p.node_count();
  const std::uint64_t m = p.graph().edge_count();
  const std::uint64_t base = 10 * (2 * n + 4 * m + 10);
  return kind == SchedulerKind::kCentral ? base * std::max<std::uint64_t>(n, 1) : base;
}

ActivationResult activate(const Problem& p, History& h, ViewTable& views, NodeId i, unsigned staleness,
                          Rng& rng) {
  const GlobalState snap = snapshot_for(h, views, i, staleness, rng);
  GuardMemo memo;
  memo.reset(p.node_count());
  GuardEvaluator ev(p, StateView(snap), memo);
  const Decision d = rules_for(p.algorithm()).decide(ev, i);
  ActivationResult result{d.rule, false};
  for (const Write& w : d.span()) result.changed |= h.append(w.node, w.value);
  return result;
}

// --- Simulation ------------------------------------------------------------

namespace {

void validate_init(const Problem& p, const GlobalState& init) {
  if (init.size() != p.node_count()) {
    throw std::invalid_argument("initial state has " + std::to_string(init.size()) + " entries for " +
                                std::to_string(p.node_count()) + " nodes");
  }
  for (LocalState s : init.values()) {
    const bool ok = p.colours() ? s.colour() >= 1 : (s.is_in() || s.is_out());
    if (!ok) throw std::invalid_argument("initial state does not match the problem's state variant");
  }
}

constexpr std::uint64_t kSchedulerStream = 0x5c4edu;

}  // namespace

Simulation::Simulation(Problem problem, const GlobalState& init, SchedulerConfig cfg, bool record)
    : problem_(std::move(problem)),
      cfg_(cfg),
      record_(record),
      max_steps_(cfg.max_steps != 0 ? cfg.max_steps : default_max_steps(problem_, cfg.kind)),
      history_((validate_init(problem_, init), init)),
      scheduler_rng_(derive_seed(cfg.seed, kSchedulerStream)) {
  const std::size_t n = problem_.node_count();
  if (cfg_.kind != SchedulerKind::kAmr) cfg_.staleness = 0;
  if (cfg_.kind == SchedulerKind::kAmr) views_ = ViewTable(problem_);
  prepare_workspaces(workspaces_, cfg_.exec);
  round_seen_.assign(n, 0);
  round_pending_ = n;
  quiet_.assign(n, 0);
  trace_.final_state = init;
}

bool Simulation::views_caught_up() const {
  if (cfg_.kind != SchedulerKind::kAmr) return true;
  for (NodeId i = 1; i <= problem_.node_count(); ++i) {
    if (!views_.caught_up(i, history_)) return false;
  }
  return true;
}

std::vector<NodeId> Simulation::pick() {
  const std::size_t n = problem_.node_count();
  const bool overdue = trace_.step_count - round_start_step_ >= n;
  std::vector<NodeId> nodes;
  switch (cfg_.kind) {
    case SchedulerKind::kSync:
      nodes.resize(n);
      for (NodeId v = 1; v <= n; ++v) nodes[v - 1] = v;
      break;
    case SchedulerKind::kCentral:
      if (overdue) {
        for (NodeId v = 1; v <= n; ++v) {
          if (round_seen_[v - 1] != round_epoch_) {
            nodes.push_back(v);
            break;
          }
        }
      } else {
        nodes.push_back(static_cast<NodeId>(scheduler_rng_.between(1, n)));
      }
      break;
    case SchedulerKind::kDistributed:
    case SchedulerKind::kAmr:
      for (NodeId v = 1; v <= n; ++v) {
        const bool chosen = scheduler_rng_.coin();
        if (chosen || (overdue && round_seen_[v - 1] != round_epoch_)) nodes.push_back(v);
      }
      if (nodes.empty()) nodes.push_back(static_cast<NodeId>(scheduler_rng_.between(1, n)));
      break;
  }
  return nodes;
}

void Simulation::execute(std::span<const NodeId> nodes) {
  const std::size_t n = problem_.node_count();
  const std::uint64_t step = trace_.step_count;
  decisions_.assign(nodes.size(), Decision{});
  std::vector<std::uint8_t> fresh(nodes.size(), 1);
  const bool amr = cfg_.kind == SchedulerKind::kAmr;
  if (record_ && amr) versions_.assign(nodes.size(), {});

  if (amr) {
    const RuleSet& rules = rules_for(problem_.algorithm());
    std::exception_ptr error;
    const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel if (cfg_.exec == Exec::kParallel)
    {
      Workspace& ws = workspaces_[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
      for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto at = static_cast<std::size_t>(k);
        const NodeId v = nodes[at];
        try {
          Rng rng(derive_seed(cfg_.seed, step + 1, v));
          if (ws.snapshot.size() != n) ws.snapshot.assign(n, LocalState::unknown());
          fresh[at] = fill_snapshot(history_, views_, v, cfg_.staleness, rng, ws.snapshot,
                                    record_ ? &versions_[at] : nullptr);
          ws.memo.reset(n);
          GuardEvaluator ev(problem_, StateView(ws.snapshot), ws.memo);
          decisions_[at] = rules.decide(ev, v);
          clear_snapshot(views_, v, ws.snapshot);
        } catch (...) {
#pragma omp critical(ella_engine_error)
          if (!error) error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    decide_exact(problem_, history_.current(), nodes, decisions_, cfg_.exec, workspaces_, memo_valid_);
    memo_valid_ = true;
  }

  StepRecord record;
  if (record_) {
    record.step = step;
    record.nodes.assign(nodes.begin(), nodes.end());
    if (amr) record.versions = versions_;
  }

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const NodeId v = nodes[k];
    ++trace_.activations;
    if (round_seen_[v - 1] != round_epoch_) {
      round_seen_[v - 1] = round_epoch_;
      --round_pending_;
    }
    if (decisions_[k].rule == RuleId::kNone && fresh[k] && quiet_[v - 1] != change_epoch_) {
      quiet_[v - 1] = change_epoch_;
      ++quiet_count_;
    }
  }

  bool any_change = false;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Decision& d = decisions_[k];
    if (record_) record.rules.push_back(d.rule);
    bool moved = false;
    for (const Write& w : d.span()) {
      moved |= history_.append(w.node, w.value);
      if (record_) record.writes.push_back(w);
    }
    if (moved) {
      ++trace_.moves;
      if (trace_.rounds >= 1) ++trace_.moves_after_first_round;
      any_change = true;
    }
  }
  if (any_change) {
    ++change_epoch_;
    quiet_count_ = 0;
    memo_valid_ = false;
  }

  ++trace_.step_count;
  if (round_pending_ == 0) {
    ++trace_.rounds;
    ++round_epoch_;
    round_pending_ = n;
    round_start_step_ = trace_.step_count;
  }
  trace_.converged = quiet_count_ == n;
  trace_.final_state = history_.current();
  if (record_) trace_.steps.push_back(std::move(record));
}

bool Simulation::step() {
  const auto nodes = pick();
  execute(nodes);
  return trace_.converged;
}

void Simulation::step_with(std::span<const NodeId> nodes) {
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!problem_.graph().contains(nodes[k]) || (k > 0 && nodes[k] <= nodes[k - 1])) {
      throw std::invalid_argument("activation set must be ascending, distinct, valid node IDs");
    }
  }
  execute(nodes);
}

const Trace& Simulation::run() {
  while (!trace_.converged) {
    if (trace_.step_count >= max_steps_) {
      throw NonTerminationError("no convergence within " + std::to_string(max_steps_) + " steps (" +
                                    std::string(algorithm_name(problem_.algorithm())) + ", " +
                                    std::string(scheduler_name(cfg_.kind)) + ", seed " +
                                    std::to_string(cfg_.seed) + ")",
                                trace_);
    }
    step();
  }
  ELLA_CHECK(is_silent(problem_, history_.current(), cfg_.exec), "converged state is not silent");
  return trace_;
}

Trace run(const Problem& p, const GlobalState& init, const SchedulerConfig& cfg, bool record) {
  Simulation sim(p, init, cfg, record);
  return sim.run();
}

}  // namespace ella
