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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ella/engine.hpp"
#include "ella/graph.hpp"
#include "ella/instance.hpp"
#include "ella/oracle.hpp"
#include "ella/problem.hpp"
#include "ella/random.hpp"
#include "ella/trace_io.hpp"

namespace ella::cli {

namespace {

constexpr std::uint64_t kInitStream = 1;

// Thrown for bad flags and unreadable inputs; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write \"" + path + "\"");
  out << text;
  if (!out) throw UsageError("write to \"" + path + "\" failed");
}

Problem load_problem(const std::string& algo, const std::string& graph, const std::string& instance) {
  if (!instance.empty()) {
    if (!algo.empty() && parse_algorithm(algo) != Algorithm::kSdmds) {
      throw UsageError("--instance is only meaningful for --algo sdmds");
    }
    return Problem(parse_sdmds_instance(read_file(instance)));
  }
  if (algo.empty()) throw UsageError("--algo is required");
  if (graph.empty()) throw UsageError("--graph or --instance is required");
  return Problem(parse_algorithm(algo), parse_edge_list(read_file(graph)));
}

GlobalState make_init(const Problem& p, const std::string& spec, std::uint64_t seed) {
  if (spec == "random") return random_state(p, derive_seed(seed, kInitStream));
  if (spec.rfind("file:", 0) == 0) return parse_state(p, read_file(spec.substr(5)));
  if (p.colours()) throw UsageError("colouring needs --init random or --init file:PATH");
  if (spec == "all-in") return all_in(p);
  if (spec == "all-out") return all_out(p);
  throw UsageError("unknown --init \"" + spec + "\"");
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonTerminationError& e) {
    err << "non-termination: " << e.what() << '\n';
    return kExitNonTermination;
  }
}

}  // namespace

std::vector<std::size_t> parse_count_list(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad count \"" + s + "\" in \"" + text + "\"");
    return static_cast<std::size_t>(v);
  };
  std::vector<std::size_t> values;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw std::invalid_argument("range must be lo:hi:step, got \"" + text + "\"");
    const std::size_t lo = number(parts[0]);
    const std::size_t hi = number(parts[1]);
    const std::size_t step = number(parts[2]);
    if (step == 0 || lo > hi) throw std::invalid_argument("empty range \"" + text + "\"");
    for (std::size_t v = lo; v <= hi; v += step) values.push_back(v);
    return values;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) values.push_back(number(part));
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

// --- gen -------------------------------------------------------------------

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.n == 0) throw UsageError("--n must be positive");
    const std::string text = write_edge_list(gen_gnm(o.n, o.m, o.seed));
    if (o.out.empty()) {
      out << text;
    } else {
      write_file(o.out, text);
    }
    return kExitOk;
  });
}

// --- run -------------------------------------------------------------------

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Problem p = load_problem(o.algo, o.graph, o.instance);
    const GlobalState init = make_init(p, o.init, o.seed);
    SchedulerConfig cfg;
    cfg.kind = parse_scheduler(o.scheduler);
    cfg.staleness = o.staleness;
    cfg.seed = o.seed;
    cfg.max_steps = o.max_steps;
    cfg.exec = o.parallel ? Exec::kParallel : Exec::kSerial;
    if (cfg.kind != SchedulerKind::kAmr && o.staleness != 0) {
      throw UsageError("--staleness applies to the amr scheduler only");
    }

    Simulation sim(p, init, cfg, !o.trace.empty());
    try {
      sim.run();
    } catch (const NonTerminationError& e) {
      if (!o.trace.empty()) write_file(o.trace, trace_to_jsonl(p, e.trace()));
      throw;
    }
    const Trace& trace = sim.trace();
    const Verdict verdict = check_optimal(p, trace.final_state);
    const BoundCheck bound = check_bounds(p, trace);

    out << "algo=" << algorithm_name(p.algorithm()) << " scheduler=" << scheduler_name(cfg.kind)
        << " staleness=" << cfg.staleness << " seed=" << o.seed << " n=" << p.node_count()
        << " m=" << p.graph().edge_count() << " moves=" << trace.moves << " rounds=" << trace.rounds
        << " activations=" << trace.activations << " steps=" << trace.step_count
        << " converged=" << (trace.converged ? "yes" : "no") << " optimal=" << (verdict.optimal ? "yes" : "no")
        << " bound=" << (bound.ok ? "ok" : "exceeded") << " (" << bound.message << ")"
        << " final=" << format_state(trace.final_state, p.colours()) << '\n';
    if (!o.trace.empty()) write_file(o.trace, trace_to_jsonl(p, trace));
    if (!verdict.optimal) {
      err << "oracle: final state is not optimal";
      if (!verdict.witness.empty()) {
        err << " (witness";
        for (NodeId v : verdict.witness) err << ' ' << v;
        err << ')';
      }
      err << '\n';
      return kExitOracle;
    }
    return kExitOk;
  });
}

// --- bench -----------------------------------------------------------------

namespace {

struct BenchJob {
  Algorithm algo;
  SchedulerKind scheduler;
  unsigned staleness;
  std::size_t m;
  std::size_t trial;
  std::uint64_t seed;
};

struct BenchRow {
  std::uint64_t moves = 0, rounds = 0, activations = 0, wall_ns = 0;
  bool optimal = false;
  std::string error;
  bool non_termination = false;
};

}  // namespace

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (o.n == 0) throw UsageError("--n must be positive");
    if (o.trials == 0) throw UsageError("--trials must be positive");
    const auto ms = parse_count_list(o.m);
    std::vector<BenchJob> jobs;
    for (const std::string& a : o.algos) {
      const Algorithm algo = parse_algorithm(a);
      for (const std::string& s : o.schedulers) {
        const SchedulerKind kind = parse_scheduler(s);
        const std::vector<unsigned> bs = kind == SchedulerKind::kAmr ? o.staleness : std::vector<unsigned>{0};
        for (unsigned b : bs) {
          for (std::size_t m : ms) {
            if (o.n < 2 ? m > 0 : m > o.n * (o.n - 1) / 2) {
              throw UsageError("m = " + std::to_string(m) + " is too large for n = " + std::to_string(o.n));
            }
            for (std::size_t t = 0; t < o.trials; ++t) {
              jobs.push_back({algo, kind, b, m, t, derive_seed(o.seed, m, t)});
            }
          }
        }
      }
    }

    std::vector<BenchRow> rows(jobs.size());
    const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const BenchJob& job = jobs[static_cast<std::size_t>(k)];
      BenchRow& row = rows[static_cast<std::size_t>(k)];
      try {
        const Problem p(job.algo, gen_gnm(o.n, job.m, job.seed));
        const GlobalState init = random_state(p, derive_seed(job.seed, kInitStream));
        SchedulerConfig cfg;
        cfg.kind = job.scheduler;
        cfg.staleness = job.staleness;
        cfg.seed = job.seed;
        const auto start = std::chrono::steady_clock::now();
        const Trace trace = run(p, init, cfg);
        const auto stop = std::chrono::steady_clock::now();
        row.moves = trace.moves;
        row.rounds = trace.rounds;
        row.activations = trace.activations;
        row.wall_ns = o.timing ? static_cast<std::uint64_t>(
                                     std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count())
                               : 0;
        // Recomputed from the final state, never taken from the engine.
        row.optimal = check_optimal(p, trace.final_state).optimal;
      } catch (const NonTerminationError& e) {
        row.error = e.what();
        row.non_termination = true;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }

    for (std::size_t k = 0; k < jobs.size(); ++k) {
      if (rows[k].error.empty()) continue;
      const BenchJob& job = jobs[k];
      err << "bench: trial failed (algo=" << algorithm_name(job.algo) << " scheduler=" << scheduler_name(job.scheduler)
          << " staleness=" << job.staleness << " n=" << o.n << " m=" << job.m << " seed=" << job.seed
          << "): " << rows[k].error << '\n';
      return rows[k].non_termination ? kExitNonTermination : kExitOracle;
    }

    std::ostringstream csv;
    csv << "algorithm,scheduler,staleness,seed,n,m,moves,rounds,activations,wall_ns,optimal\n";
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      const BenchJob& job = jobs[k];
      const BenchRow& row = rows[k];
      csv << algorithm_name(job.algo) << ',' << scheduler_name(job.scheduler) << ',' << job.staleness << ','
          << job.seed << ',' << o.n << ',' << job.m << ',' << row.moves << ',' << row.rounds << ','
          << row.activations << ',' << row.wall_ns << ',' << (row.optimal ? 1 : 0) << '\n';
    }
    if (o.out.empty()) {
      out << csv.str();
    } else {
      write_file(o.out, csv.str());
      // Means per configuration.
      struct Acc {
        double moves = 0, rounds = 0, activations = 0, optimal = 0;
        std::size_t count = 0;
      };
      std::map<std::tuple<std::string, std::string, unsigned, std::size_t>, Acc> table;
      std::vector<std::tuple<std::string, std::string, unsigned, std::size_t>> order;
      for (std::size_t k = 0; k < jobs.size(); ++k) {
        const auto key = std::make_tuple(std::string(algorithm_name(jobs[k].algo)),
                                         std::string(scheduler_name(jobs[k].scheduler)), jobs[k].staleness, jobs[k].m);
        auto [it, inserted] = table.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.moves += static_cast<double>(rows[k].moves);
        it->second.rounds += static_cast<double>(rows[k].rounds);
        it->second.activations += static_cast<double>(rows[k].activations);
        it->second.optimal += rows[k].optimal ? 1 : 0;
        ++it->second.count;
      }
      out << std::left << std::setw(7) << "algo" << std::setw(13) << "scheduler" << std::setw(4) << "B"
          << std::setw(8) << "m" << std::right << std::setw(12) << "moves" << std::setw(10) << "rounds"
          << std::setw(14) << "activations" << std::setw(10) << "optimal" << '\n';
      out << std::fixed << std::setprecision(1);
      for (const auto& key : order) {
        const Acc& acc = table[key];
        const auto c = static_cast<double>(acc.count);
        out << std::left << std::setw(7) << std::get<0>(key) << std::setw(13) << std::get<1>(key) << std::setw(4)
            << std::get<2>(key) << std::setw(8) << std::get<3>(key) << std::right << std::setw(12)
            << acc.moves / c << std::setw(10) << acc.rounds / c << std::setw(14) << acc.activations / c
            << std::setw(9) << 100.0 * acc.optimal / c << "%\n";
      }
    }
    return kExitOk;
  });
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Problem p = load_problem(o.algo, o.graph, o.instance);
    if (p.node_count() > kMaxLatticeNodes) {
      throw OracleSizeError("verify explores the full state space and needs n <= " +
                            std::to_string(kMaxLatticeNodes) + " (got n = " + std::to_string(p.node_count()) + ")");
    }
    const LatticeDecomposition d = enumerate_lattices(p, Exec::kParallel);
    const LatticeReport report = check_lattice_linearity(p, Exec::kParallel);
    out << d.feasible.size() << " feasible / " << d.components.size() << " lattices / " << d.infeasible.size()
        << " infeasible / lattice-linear: " << (report.pass ? "pass" : "FAIL") << '\n';
    if (!report.pass) out << "counterexample: " << report.reason << '\n';
    if (!o.dot.empty()) write_file(o.dot, lattice_to_dot(p, d));
    return report.pass ? kExitOk : kExitOracle;
  });
}

// --- entry point -----------------------------------------------------------

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate and verify eventually lattice-linear self-stabilizing graph algorithms", "ella"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a uniform random G(n, m) graph as an edge list");
  gen_cmd->add_option("--n", gen.n, "Node count")->required();
  gen_cmd->add_option("--m", gen.m, "Edge count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run one algorithm to convergence and check the result");
  run_cmd->add_option("--algo", run.algo, "sdmds|mds|mvc|mis|gc|2ds");
  run_cmd->add_option("--graph", run.graph, "Edge-list file");
  run_cmd->add_option("--instance", run.instance, "Service/demand instance (JSON)");
  run_cmd->add_option("--scheduler", run.scheduler, "central|distributed|sync|amr");
  run_cmd->add_option("--staleness", run.staleness, "Staleness bound B (amr)");
  run_cmd->add_option("--seed", run.seed, "Seed for the scheduler, reads and random init");
  run_cmd->add_option("--init", run.init, "random|all-in|all-out|file:PATH");
  run_cmd->add_option("--max-steps", run.max_steps, "Step budget (default derived from n and m)");
  run_cmd->add_option("--trace", run.trace, "Write the JSON-lines trace here");
  run_cmd->add_flag("--parallel", run.parallel, "Evaluate guards with the OpenMP kernel");

  BenchOptions bench;
  std::string algos = "mis";
  std::string schedulers = "sync,amr";
  std::string staleness = "4";
  bool no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep configurations and write one CSV row per trial");
  bench_cmd->add_option("--algo", algos, "Comma-separated algorithms");
  bench_cmd->add_option("--n", bench.n, "Node count");
  bench_cmd->add_option("--m", bench.m, "Edge counts: a,b,c or lo:hi:step");
  bench_cmd->add_option("--trials", bench.trials, "Trials per configuration");
  bench_cmd->add_option("--scheduler", schedulers, "Comma-separated schedulers");
  bench_cmd->add_option("--staleness", staleness, "Comma-separated staleness bounds (amr)");
  bench_cmd->add_option("--seed", bench.seed, "Master seed");
  bench_cmd->add_option("--out", bench.out, "CSV output file (default: stdout)");
  bench_cmd->add_flag("--no-timing", no_timing, "Write wall_ns as 0 for byte-stable output");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check lattice structure on a small input");
  verify_cmd->add_option("algo,--algo", verify.algo, "sdmds|mds|mvc|mis|gc|2ds");
  verify_cmd->add_option("graph,--graph", verify.graph, "Edge-list file");
  verify_cmd->add_option("--instance", verify.instance, "Service/demand instance (JSON)");
  verify_cmd->add_option("--dot", verify.dot, "Write the lattice as Graphviz DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto split = [](const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
      if (!part.empty()) parts.push_back(part);
    }
    return parts;
  };

  if (*gen_cmd) return cmd_gen(gen, out, err);
  if (*run_cmd) return cmd_run(run, out, err);
  if (*bench_cmd) {
    bench.algos = split(algos);
    bench.schedulers = split(schedulers);
    bench.timing = !no_timing;
    bench.staleness.clear();
    try {
      for (std::size_t b : parse_count_list(staleness)) bench.staleness.push_back(static_cast<unsigned>(b));
    } catch (const std::invalid_argument& e) {
      err << "error: --staleness: " << e.what() << '\n';
      return kExitUsage;
    }
    return cmd_bench(bench, out, err);
  }
  return cmd_verify(verify, out, err);
}

}  // namespace ella::cli
