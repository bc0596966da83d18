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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "ella/engine.hpp"
#include "ella/guards.hpp"
#include "ella/oracle.hpp"
#include "ella/trace_io.hpp"
#include "support/zoo.hpp"

namespace ella {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
  std::printf("criterion %d %s: %s (%s)\n", id, pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// ---- shared corpus -------------------------------------------------------

struct CorpusGraph {
  std::uint64_t seed;
  Graph graph;
};

std::vector<CorpusGraph> corpus() {
  std::vector<CorpusGraph> out;
  for (std::uint64_t g = 0; g < 50; ++g) {
    const std::uint64_t seed = derive_seed(42, g);
    Rng rng(seed);
    const std::size_t n = rng.between(10, 100);
    const std::size_t m = std::min<std::size_t>(rng.between(n, 5 * n), n * (n - 1) / 2);
    out.push_back({seed, gen_gnm(n, m, seed)});
  }
  return out;
}

struct Schedule {
  SchedulerKind kind;
  unsigned staleness;
  std::string name() const {
    return std::string(scheduler_name(kind)) + (kind == SchedulerKind::kAmr ? "(B=" + std::to_string(staleness) + ")" : "");
  }
};

struct Outcome {
  bool converged = false;
  bool optimal = false;
  bool closure = true;
  BoundCheck bound;
  std::string error;
};

struct Job {
  std::size_t graph;
  Algorithm algo;
  Schedule schedule;
};

// Runs one corpus job. With `closure`, continues 10n single-node activations
// after convergence and flags any move made once every view has caught up.
Outcome run_job(const CorpusGraph& cg, const Job& job, bool closure) {
  Outcome o;
  const Problem p(job.algo, cg.graph);
  const auto code = static_cast<std::uint64_t>(job.algo) * 16 + static_cast<std::uint64_t>(job.schedule.kind) * 4 +
                    job.schedule.staleness;
  const GlobalState init = random_state(p, derive_seed(cg.seed, 1, code));
  SchedulerConfig cfg;
  cfg.kind = job.schedule.kind;
  cfg.staleness = job.schedule.staleness;
  cfg.seed = derive_seed(cg.seed, 2, code);
  try {
    Simulation sim(p, init, cfg);
    const Trace& t = sim.run();
    o.converged = t.converged;
    o.optimal = check_optimal(p, t.final_state).optimal;
    o.bound = check_bounds(p, t);
    if (closure) {
      Rng rng(derive_seed(cg.seed, 3, code));
      const std::size_t n = p.node_count();
      bool settled = false;
      std::uint64_t moves_at_settle = 0;
      for (std::size_t a = 0; a < 10 * n; ++a) {
        if (!settled && sim.views_caught_up()) {
          settled = true;
          moves_at_settle = sim.trace().moves;
        }
        const NodeId v = static_cast<NodeId>(rng.between(1, n));
        sim.step_with(std::span<const NodeId>(&v, 1));
      }
      o.closure = settled && sim.trace().moves == moves_at_settle && sim.state() == t.final_state;
    }
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

std::vector<Outcome> run_all(const std::vector<CorpusGraph>& graphs, const std::vector<Job>& jobs, bool closure) {
  std::vector<Outcome> out(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const Job& job = jobs[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = run_job(graphs[job.graph], job, closure);
  }
  return out;
}

std::string job_label(const std::vector<CorpusGraph>& graphs, const Job& job) {
  const Graph& g = graphs[job.graph].graph;
  return std::string(algorithm_name(job.algo)) + "/" + job.schedule.name() + " graph " + std::to_string(job.graph) +
         " (n=" + std::to_string(g.node_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
}

// ---- criteria ------------------------------------------------------------

void lattice_of_g4() {
  const auto start = Clock::now();
  const Problem mds(Algorithm::kSdmds, testing::g4());
  const LatticeDecomposition d = enumerate_lattices(mds);
  const double secs = seconds_since(start);
  std::multiset<std::size_t> sizes;
  std::set<std::string> tops;
  bool single_tops = true;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    sizes.insert(d.components[c].size());
    single_tops &= d.suprema[c].size() == 1;
    for (std::size_t k : d.suprema[c]) tops.insert(format_state(d.feasible[k], false));
  }
  const std::set<std::string> want_tops{"(IN,OUT,IN,OUT)", "(OUT,IN,OUT,IN)", "(OUT,IN,IN,OUT)", "(IN,OUT,OUT,IN)"};
  const bool pass = d.feasible.size() == 9 && d.infeasible.size() == 7 && d.components.size() == 4 &&
                    sizes == std::multiset<std::size_t>{4, 1, 2, 2} && single_tops && tops == want_tops && secs < 1.0;
  std::ostringstream detail;
  detail << d.feasible.size() << " feasible, " << d.infeasible.size() << " infeasible, " << d.components.size()
         << " components of sizes";
  for (std::size_t s : sizes) detail << ' ' << s;
  detail << ", suprema";
  for (const auto& t : tops) detail << ' ' << t;
  detail << ", " << secs << " s";
  report(1, pass, "lattice decomposition of G4 under MDS", detail.str());
}

void impedensable_in_g4() {
  const Problem mds(Algorithm::kSdmds, testing::g4());
  const GlobalState all = all_in(mds);
  const auto set = impedensable_set(mds, all);
  SchedulerConfig cfg;
  cfg.kind = SchedulerKind::kDistributed;
  Simulation sim(mds, all, cfg);
  sim.step_with(set);
  const GlobalState after = sim.state();
  const bool pass = set == std::vector<NodeId>{2, 4} && after == GlobalState::memberships({true, false, true, false});
  std::ostringstream detail;
  detail << "impedensable {";
  for (std::size_t k = 0; k < set.size(); ++k) detail << (k ? "," : "") << set[k];
  detail << "}, after firing " << format_state(after, false);
  report(2, pass, "impedensable set of G4 with every node IN", detail.str());
}

void convergence_and_bounds(const std::vector<CorpusGraph>& graphs) {
  const auto start = Clock::now();
  const std::vector<Schedule> schedules{{SchedulerKind::kCentral, 0}, {SchedulerKind::kDistributed, 0},
                                        {SchedulerKind::kSync, 0},    {SchedulerKind::kAmr, 0},
                                        {SchedulerKind::kAmr, 1},     {SchedulerKind::kAmr, 4},
                                        {SchedulerKind::kAmr, 16}};
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    for (Algorithm a : kAllAlgorithms) {
      for (const Schedule& s : schedules) jobs.push_back({g, a, s});
    }
  }
  const auto outcomes = run_all(graphs, jobs, false);
  const double secs = seconds_since(start);

  std::size_t runs3 = 0, bad3 = 0, runs4 = 0, bad4 = 0;
  std::string first3, first4;
  double worst = 0, worst_after = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const Job& job = jobs[k];
    const Outcome& o = outcomes[k];
    const bool fresh = job.schedule.staleness == 0;
    // Criterion 3 covers central, distributed, sync and amr with B in {1, 4, 16}.
    if (!(job.schedule.kind == SchedulerKind::kAmr && fresh)) {
      ++runs3;
      if (!o.error.empty() || !o.converged || !o.optimal) {
        if (bad3++ == 0) first3 = job_label(graphs, job) + ": " + (o.error.empty() ? "not optimal" : o.error);
      }
    }
    if (fresh) {
      ++runs4;
      if (!o.error.empty() || !o.bound.ok) {
        if (bad4++ == 0) first4 = job_label(graphs, job) + ": " + (o.error.empty() ? o.bound.message : o.error);
      }
      if (o.error.empty()) {
        worst = std::max(worst, static_cast<double>(o.bound.moves) / std::max<std::uint64_t>(o.bound.limit, 1));
        if (o.bound.limit_after_first_round) {
          worst_after = std::max(worst_after, static_cast<double>(o.bound.moves_after_first_round) /
                                                  std::max<std::uint64_t>(*o.bound.limit_after_first_round, 1));
        }
      }
    }
  }
  std::ostringstream d3;
  d3 << runs3 << " runs, " << bad3 << " failures, " << secs << " s for both corpora";
  if (bad3) d3 << "; first: " << first3;
  report(3, bad3 == 0 && secs < 300, "convergence to optimal states on 50 random graphs", d3.str());
  std::ostringstream d4;
  d4 << runs4 << " fresh-read runs, " << bad4 << " violations, worst moves/limit " << worst
     << ", worst after-first-round ratio " << worst_after;
  if (bad4) d4 << "; first: " << first4;
  report(4, bad4 == 0, "move bounds", d4.str());
}

// Exhaustive trajectory checks on the uniform reduction over every graph
// with at most five nodes: feasibility from the end of the first round,
// strict shrinking of non-minimal sets per round, silence of optimal states,
// and lattice-linearity of the second rule.
void small_graph_suite() {
  const auto start = Clock::now();
  const auto zoo = testing::graph_zoo(5);
  std::size_t rank_bad = 0, shrink_bad = 0, silent_bad = 0, linear_bad = 0, trajectories = 0;
  std::string first;
  auto note = [&](const std::string& what) {
    if (first.empty()) first = what;
  };
  for (const Graph& g : zoo) {
    const Problem p(Algorithm::kSdmds, g);
    const auto states = enumerate_states(p);
    for (const GlobalState& s : states) {
      if (check_optimal(p, s).optimal && !is_silent(p, s)) {
        ++silent_bad;
        note("optimal but enabled: " + format_state(s, false) + " on " + testing::describe(g));
      }
    }
    const LatticeReport lr = check_lattice_linearity(p);
    if (!lr.pass) {
      ++linear_bad;
      note(lr.reason + " on " + testing::describe(g));
    }
    for (const GlobalState& init : states) {
      for (SchedulerKind kind : {SchedulerKind::kCentral, SchedulerKind::kDistributed, SchedulerKind::kSync}) {
        for (std::uint64_t seed = 1; seed <= (kind == SchedulerKind::kSync ? 1u : 3u); ++seed) {
          ++trajectories;
          SchedulerConfig cfg;
          cfg.kind = kind;
          cfg.seed = seed;
          Simulation sim(p, init, cfg);
          GlobalState round_start = init;
          std::uint64_t rounds_seen = 0;
          while (!sim.converged()) {
            sim.step();
            const GlobalState& now = sim.state();
            if (sim.trace().rounds >= 1 && rank(p, now) != 0) {
              ++rank_bad;
              note("rank > 0 after round 1 from " + format_state(init, false) + " on " + testing::describe(g));
            }
            if (sim.trace().rounds == rounds_seen) continue;
            // A round just completed.
            if (rounds_seen >= 1 && badness(p, round_start) > 0) {
              bool subset = now.count_in() < round_start.count_in();
              for (NodeId v = 1; v <= g.node_count(); ++v) subset &= !(now[v].is_in() && round_start[v].is_out());
              if (!subset || !check_feasible(p, now)) {
                ++shrink_bad;
                note("round did not shrink " + format_state(round_start, false) + " on " + testing::describe(g));
              }
            }
            rounds_seen = sim.trace().rounds;
            round_start = now;
          }
        }
      }
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << zoo.size() << " graphs, " << trajectories << " trajectories; rank-after-round-1 failures " << rank_bad
    << ", non-shrinking rounds " << shrink_bad << ", enabled optimal states " << silent_bad
    << ", lattice-linearity failures " << linear_bad << ", " << secs << " s";
  if (!first.empty()) d << "; first: " << first;
  report(5, rank_bad + shrink_bad + silent_bad + linear_bad == 0 && secs < 120,
         "exhaustive small-graph suite (uniform SDMDS)", d.str());
}

void amr_closure(const std::vector<CorpusGraph>& graphs) {
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    for (Algorithm a : kAllAlgorithms) jobs.push_back({g, a, {SchedulerKind::kAmr, 16}});
  }
  const auto outcomes = run_all(graphs, jobs, true);
  std::size_t bad = 0;
  std::string first;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const Outcome& o = outcomes[k];
    if (!o.error.empty() || !o.converged || !o.optimal || !o.closure) {
      if (bad++ == 0) {
        first = job_label(graphs, jobs[k]) + ": " +
                (!o.error.empty() ? o.error : !o.optimal ? "not optimal" : "moved after views caught up");
      }
    }
  }
  std::ostringstream d;
  d << jobs.size() << " runs with 10n extra activations each, " << bad << " failures";
  if (bad) d << "; first: " << first;
  report(6, bad == 0, "stale-read tolerance and closure (amr, B=16)", d.str());
}

struct CsvRow {
  std::vector<std::string> cells;
};

std::vector<CsvRow> parse_csv(const std::string& text, std::string& header) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::getline(in, header);
  for (std::string line; std::getline(in, line);) {
    CsvRow r;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) r.cells.push_back(cell);
    rows.push_back(std::move(r));
  }
  return rows;
}

void bench_harness() {
  const auto start = Clock::now();
  cli::BenchOptions o;
  o.algos = {"mis"};
  o.n = 1000;
  o.m = "2000:10000:2000";
  o.trials = 16;
  o.schedulers = {"sync", "amr"};
  o.staleness = {4};
  o.seed = 2026;
  std::ostringstream timed, plain_a, plain_b, err;
  const int rc_timed = cli::cmd_bench(o, timed, err);
  o.timing = false;
  const int rc_a = cli::cmd_bench(o, plain_a, err);
  const int rc_b = cli::cmd_bench(o, plain_b, err);

  std::string header, header_plain;
  const auto rows = parse_csv(timed.str(), header);
  const auto rows_plain = parse_csv(plain_a.str(), header_plain);
  bool complete = header == "algorithm,scheduler,staleness,seed,n,m,moves,rounds,activations,wall_ns,optimal" &&
                  rows.size() == 2 * 5 * 16 && rows_plain.size() == rows.size();
  bool all_optimal = true;
  bool same_but_time = true;
  std::map<std::pair<std::string, std::string>, std::pair<double, double>> means;  // (scheduler, m)
  std::set<std::string> ms;
  for (std::size_t k = 0; complete && k < rows.size(); ++k) {
    const auto& c = rows[k].cells;
    if (c.size() != 11) {
      complete = false;
      break;
    }
    all_optimal &= c[10] == "1";
    ms.insert(c[5]);
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (x != 9) same_but_time &= c[x] == rows_plain[k].cells[x];
    }
    auto& acc = means[{c[1], c[5]}];
    acc.first += std::stod(c[6]) / 16.0;
    acc.second += std::stod(c[7]) / 16.0;
  }
  complete &= ms == std::set<std::string>{"2000", "4000", "6000", "8000", "10000"} && means.size() == 10;
  const bool deterministic = plain_a.str() == plain_b.str() && same_but_time;
  const double secs = seconds_since(start);

  std::ostringstream d;
  d << rows.size() << " rows, " << (all_optimal ? "all" : "not all") << " optimal, "
    << (deterministic ? "byte-identical reruns" : "reruns differ") << ", " << secs << " s for three sweeps";
  report(7, rc_timed == 0 && rc_a == 0 && rc_b == 0 && complete && all_optimal && deterministic,
         "sync-vs-async MIS harness, n=1000", d.str());
  std::printf("  mean moves / rounds per configuration:\n");
  for (const auto& m : {"2000", "4000", "6000", "8000", "10000"}) {
    const auto s = means[{"sync", m}];
    const auto a = means[{"amr", m}];
    std::printf("    m=%-6s sync %7.1f / %5.2f   amr(B=4) %7.1f / %5.2f\n", m, s.first, s.second, a.first, a.second);
  }
}

void determinism() {
  std::size_t configs = 0, mismatches = 0;
  std::string first;
  Rng rng(8);
  for (int g = 0; g < 4; ++g) {
    const Graph graph = gen_gnm(10 + 10 * g, 30 + 20 * g, rng.next());
    for (Algorithm a : kAllAlgorithms) {
      const Problem p(a, graph);
      const GlobalState init = random_state(p, rng.next());
      for (const auto& [kind, b] : std::vector<std::pair<SchedulerKind, unsigned>>{
               {SchedulerKind::kCentral, 0}, {SchedulerKind::kDistributed, 0}, {SchedulerKind::kSync, 0},
               {SchedulerKind::kAmr, 1}, {SchedulerKind::kAmr, 16}}) {
        SchedulerConfig cfg;
        cfg.kind = kind;
        cfg.staleness = b;
        cfg.seed = rng.next();
        const std::string x = trace_to_jsonl(p, run(p, init, cfg, true));
        const std::string y = trace_to_jsonl(p, run(p, init, cfg, true));
        cfg.exec = Exec::kParallel;
        const std::string z = trace_to_jsonl(p, run(p, init, cfg, true));
        ++configs;
        if (x != y || x != z) {
          if (mismatches++ == 0) first = std::string(algorithm_name(a)) + "/" + std::string(scheduler_name(kind));
        }
      }
    }
  }
  cli::BenchOptions o;
  o.algos = {"sdmds", "mvc", "mis", "gc", "2ds"};
  o.n = 40;
  o.m = "40,120";
  o.trials = 2;
  o.schedulers = {"central", "distributed", "sync", "amr"};
  o.staleness = {1, 16};
  o.timing = false;
  std::ostringstream a, b, err;
  const bool csv_same = cli::cmd_bench(o, a, err) == 0 && cli::cmd_bench(o, b, err) == 0 && a.str() == b.str();
  std::ostringstream d;
  d << configs << " recorded traces exported twice and once in parallel, " << mismatches << " mismatches; CSV "
    << (csv_same ? "byte-identical" : "differs");
  if (mismatches) d << "; first: " << first;
  report(8, mismatches == 0 && csv_same, "determinism of traces and CSV rows", d.str());
}

}  // namespace
}  // namespace ella

int main() {
  using namespace ella;
  std::printf("acceptance run on %d OpenMP thread(s)\n", omp_get_max_threads());
  const auto graphs = corpus();
  lattice_of_g4();
  impedensable_in_g4();
  convergence_and_bounds(graphs);
  small_graph_suite();
  amr_closure(graphs);
  bench_harness();
  determinism();
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
