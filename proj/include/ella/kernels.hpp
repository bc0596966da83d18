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

#ifndef ELLA_KERNELS_HPP_
#define ELLA_KERNELS_HPP_

#include <span>
#include <vector>

#include "ella/guards.hpp"
#include "ella/rules.hpp"

namespace ella {

/// Serial is the reference; Parallel splits nodes across OpenMP threads and
/// must produce identical results.
enum class Exec { kSerial, kParallel };

/// Per-thread scratch: a guard memo and a snapshot buffer.
struct Workspace {
  GuardMemo memo;
  std::vector<LocalState> snapshot;
};

/// Ensures one workspace per usable thread (one for serial execution).
void prepare_workspaces(std::vector<Workspace>& ws, Exec exec);

/// Decides every node of `nodes` against the exact state `s`. When
/// `memo_valid` is false the memos are reset first.
void decide_exact(const Problem& p, const GlobalState& s, std::span<const NodeId> nodes,
                  std::span<Decision> out, Exec exec, std::vector<Workspace>& ws, bool memo_valid);

/// No guard of any node holds on the exact state.
bool is_silent(const Problem& p, const GlobalState& s, Exec exec = Exec::kSerial);

}  // namespace ella

#endif  // ELLA_KERNELS_HPP_
