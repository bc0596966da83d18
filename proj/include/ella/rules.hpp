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

#ifndef ELLA_RULES_HPP_
#define ELLA_RULES_HPP_

#include <array>
#include <cstdint>
#include <string_view>

#include "ella/guards.hpp"

namespace ella {

enum class RuleId : std::uint8_t { kNone = 0, kF1 = 1, kF2 = 2 };

struct Write {
  NodeId node = 0;
  LocalState value;
  friend bool operator==(const Write&, const Write&) = default;
};

/// Outcome of evaluating one node's rules. Only the 2DS swap produces three
/// writes.
struct Decision {
  RuleId rule = RuleId::kNone;
  std::array<Write, 3> writes{};
  std::uint8_t write_count = 0;

  void add(NodeId v, LocalState s) { writes[write_count++] = {v, s}; }
  std::span<const Write> span() const { return {writes.data(), write_count}; }
};

struct Rule {
  std::string_view name;
  bool (*guard)(GuardEvaluator&, NodeId);
  void (*action)(GuardEvaluator&, NodeId, Decision&);
};

/// Two guarded commands: F1 drives into the feasible region, F2 walks the
/// lattice toward the optimum.
struct RuleSet {
  Algorithm algorithm;
  std::array<Rule, 2> rules;
  unsigned read_radius;  // 0 = whole graph

  /// Fires the first enabled rule. Throws std::logic_error if both guards
  /// hold (checked only in builds with ELLA_DCHECKS when F1 fires).
  Decision decide(GuardEvaluator& ev, NodeId i) const;
};

const RuleSet& sdmds_rules();
const RuleSet& mvc_rules();
const RuleSet& mis_rules();
const RuleSet& gc_rules();
const RuleSet& tds_rules();
const RuleSet& rules_for(Algorithm a);

std::string_view rule_name(Algorithm a, RuleId r);

}  // namespace ella

#endif  // ELLA_RULES_HPP_
