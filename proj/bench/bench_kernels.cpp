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


// Serial reference vs OpenMP kernels: one guard-evaluation step over every
// node, the silence check, and exhaustive state classification.

#include <benchmark/benchmark.h>

#include <numeric>

#include "ella/engine.hpp"
#include "ella/kernels.hpp"
#include "ella/oracle.hpp"

namespace ella {
namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::kParallel : Exec::kSerial; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_DecideAll(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(1));
  const std::size_t n = static_cast<std::size_t>(state.range(2));
  const Problem p(algo, gen_gnm(n, 5 * n, 1));
  const GlobalState s = random_state(p, 2);
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{1});
  std::vector<Decision> out(n);
  std::vector<Workspace> ws;
  prepare_workspaces(ws, exec_of(state));
  for (auto _ : state) {
    decide_exact(p, s, nodes, out, exec_of(state), ws, false);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(n));
  set_label(state);
}

void BM_IsSilent(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(1));
  const std::size_t n = static_cast<std::size_t>(state.range(2));
  const Problem p(algo, gen_gnm(n, 5 * n, 1));
  SchedulerConfig cfg;
  const GlobalState silent = run(p, random_state(p, 2), cfg).final_state;
  for (auto _ : state) benchmark::DoNotOptimize(is_silent(p, silent, exec_of(state)));
  set_label(state);
}

void BM_LatticeLinearity(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(1));
  const Problem p(algo, gen_gnm(5, 6, 3));
  for (auto _ : state) benchmark::DoNotOptimize(check_lattice_linearity(p, exec_of(state)).pass);
  set_label(state);
}

void BM_Simulation(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const Problem p(Algorithm::kMis, gen_gnm(n, 5 * n, 1));
  const GlobalState init = random_state(p, 2);
  SchedulerConfig cfg;
  cfg.kind = SchedulerKind::kSync;
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(run(p, init, cfg).moves);
  set_label(state);
}

void algorithm_args(benchmark::internal::Benchmark* b) {
  for (int exec : {0, 1}) {
    for (int algo : {0, 2, 3, 4}) b->Args({exec, algo, 2000});
  }
}

BENCHMARK(BM_DecideAll)->Apply(algorithm_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IsSilent)->Apply(algorithm_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LatticeLinearity)
    ->ArgsProduct({{0, 1}, {0, 1, 2, 4}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Simulation)->ArgsProduct({{0, 1}, {1000, 10000}})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ella

BENCHMARK_MAIN();
