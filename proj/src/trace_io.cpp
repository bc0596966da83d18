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

#include "ella/trace_io.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace ella {

using ojson = nlohmann::ordered_json;

namespace {

ojson value_json(const Problem& p, LocalState s) {
  if (p.colours()) return s.colour();
  return s.is_in() ? "IN" : "OUT";
}

}  // namespace

void write_trace(std::ostream& out, const Problem& p, const Trace& trace) {
  for (const StepRecord& r : trace.steps) {
    ojson line;
    line["step"] = r.step;
    line["nodes"] = r.nodes;
    ojson rules = ojson::array();
    for (RuleId id : r.rules) rules.push_back(std::string(rule_name(p.algorithm(), id)));
    line["rules"] = std::move(rules);
    line["versions"] = r.versions.empty() ? ojson(nullptr) : ojson(r.versions);
    ojson writes = ojson::array();
    for (const Write& w : r.writes) writes.push_back({w.node, value_json(p, w.value)});
    line["writes"] = std::move(writes);
    out << line.dump() << '\n';
  }
  ojson summary;
  summary["moves"] = trace.moves;
  summary["moves_after_first_round"] = trace.moves_after_first_round;
  summary["rounds"] = trace.rounds;
  summary["activations"] = trace.activations;
  summary["steps"] = trace.step_count;
  summary["converged"] = trace.converged;
  summary["final_digest"] = state_digest(trace.final_state);
  out << ojson{{"summary", std::move(summary)}}.dump() << '\n';
}

std::string trace_to_jsonl(const Problem& p, const Trace& trace) {
  std::ostringstream out;
  write_trace(out, p, trace);
  return out.str();
}

}  // namespace ella
