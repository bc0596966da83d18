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

#include "ella/kernels.hpp"

#include <omp.h>

#include <exception>

namespace ella {

void prepare_workspaces(std::vector<Workspace>& ws, Exec exec) {
  const std::size_t want = exec == Exec::kParallel ? static_cast<std::size_t>(omp_get_max_threads()) : 1;
  if (ws.size() < want) ws.resize(want);
}

void decide_exact(const Problem& p, const GlobalState& s, std::span<const NodeId> nodes,
                  std::span<Decision> out, Exec exec, std::vector<Workspace>& ws, bool memo_valid) {
  const RuleSet& rules = rules_for(p.algorithm());
  prepare_workspaces(ws, exec);
  const StateView view(s);
  if (exec == Exec::kSerial) {
    if (!memo_valid) ws[0].memo.reset(p.node_count());
    GuardEvaluator ev(p, view, ws[0].memo);
    for (std::size_t k = 0; k < nodes.size(); ++k) out[k] = rules.decide(ev, nodes[k]);
    return;
  }
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel
  {
    Workspace& mine = ws[static_cast<std::size_t>(omp_get_thread_num())];
    if (!memo_valid) mine.memo.reset(p.node_count());
    GuardEvaluator ev(p, view, mine.memo);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      try {
        out[static_cast<std::size_t>(k)] = rules.decide(ev, nodes[static_cast<std::size_t>(k)]);
      } catch (...) {
#pragma omp critical(ella_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

bool is_silent(const Problem& p, const GlobalState& s, Exec exec) {
  const std::size_t n = p.node_count();
  const StateView view(s);
  if (exec == Exec::kSerial) {
    GuardMemo memo;
    memo.reset(n);
    GuardEvaluator ev(p, view, memo);
    for (NodeId v = 1; v <= n; ++v) {
      if (ev.f1(v) || ev.f2(v)) return false;
    }
    return true;
  }
  bool enabled = false;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel reduction(|| : enabled)
  {
    GuardMemo memo;
    memo.reset(n);
    GuardEvaluator ev(p, view, memo);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const auto v = static_cast<NodeId>(k + 1);
      if (ev.f1(v) || ev.f2(v)) enabled = true;
    }
  }
  return !enabled;
}

}  // namespace ella
