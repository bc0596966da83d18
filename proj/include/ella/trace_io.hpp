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

#ifndef ELLA_TRACE_IO_HPP_
#define ELLA_TRACE_IO_HPP_

#include <iosfwd>
#include <string>

#include "ella/engine.hpp"

namespace ella {

/// JSON lines: one object per recorded step
///   {"step", "nodes", "rules", "versions", "writes"}
/// ("versions" is null for exact reads), then one summary line
///   {"summary": {"moves", "rounds", "activations", "steps", "converged", "final_digest"}}.
void write_trace(std::ostream& out, const Problem& p, const Trace& trace);
std::string trace_to_jsonl(const Problem& p, const Trace& trace);

}  // namespace ella

#endif  // ELLA_TRACE_IO_HPP_
