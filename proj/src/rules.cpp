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

#include "ella/rules.hpp"

namespace ella {

Decision RuleSet::decide(GuardEvaluator& ev, NodeId i) const {
  Decision d;
  if (rules[0].guard(ev, i)) {
    ELLA_DCHECK(!rules[1].guard(ev, i), "both rules enabled at node " + std::to_string(i));
    d.rule = RuleId::kF1;
    rules[0].action(ev, i, d);
  } else if (rules[1].guard(ev, i)) {
    d.rule = RuleId::kF2;
    rules[1].action(ev, i, d);
  }
  return d;
}

namespace {

void set_in(GuardEvaluator&, NodeId i, Decision& d) { d.add(i, LocalState::in()); }
void set_out(GuardEvaluator&, NodeId i, Decision& d) { d.add(i, LocalState::out()); }

void gc_shift(GuardEvaluator& ev, NodeId i, Decision& d) {
  d.add(i, LocalState::colour(ev.view().colour(i) + ev.problem().graph().id(i)));
}
void gc_reduce(GuardEvaluator& ev, NodeId i, Decision& d) { d.add(i, LocalState::colour(ev.gc_min_free(i))); }

void tds_improve(GuardEvaluator& ev, NodeId i, Decision& d) {
  if (ev.view().in(i)) {
    d.add(i, LocalState::out());
    return;
  }
  const auto w = ev.tds_witness(i);
  ELLA_CHECK(w.has_value(), "2DS swap without a witness");
  d.add(w->first, LocalState::out());
  d.add(w->second, LocalState::out());
  d.add(i, LocalState::in());
}

const RuleSet kSdmds{Algorithm::kSdmds,
                     {{{"Addable-SDMDS", [](GuardEvaluator& e, NodeId i) { return e.sdmds_addable(i); }, set_in},
                       {"Impedensable-SDMDS", [](GuardEvaluator& e, NodeId i) { return e.sdmds_impedensable(i); },
                        set_out}}},
                     4};
const RuleSet kMvc{Algorithm::kMvc,
                   {{{"Addable-MVC", [](GuardEvaluator& e, NodeId i) { return e.mvc_addable(i); }, set_in},
                     {"Impedensable-MVC", [](GuardEvaluator& e, NodeId i) { return e.mvc_impedensable(i); },
                      set_out}}},
                   2};
const RuleSet kMis{Algorithm::kMis,
                   {{{"Removable-MIS", [](GuardEvaluator& e, NodeId i) { return e.mis_removable(i); }, set_out},
                     {"Impedensable-MIS", [](GuardEvaluator& e, NodeId i) { return e.mis_impedensable(i); },
                      set_in}}},
                   2};
const RuleSet kGc{Algorithm::kGc,
                  {{{"Conflicted-GC", [](GuardEvaluator& e, NodeId i) { return e.gc_conflicted(i); }, gc_shift},
                    {"Impedensable-GC", [](GuardEvaluator& e, NodeId i) { return e.gc_impedensable(i); },
                     gc_reduce}}},
                  0};
const RuleSet kTds{Algorithm::kTwoDs,
                   {{{"Addable-2DS", [](GuardEvaluator& e, NodeId i) { return e.tds_addable(i); }, set_in},
                     {"Impedensable-2DS", [](GuardEvaluator& e, NodeId i) { return e.tds_impedensable(i); },
                      tds_improve}}},
                   8};

}  // namespace

const RuleSet& sdmds_rules() { return kSdmds; }
const RuleSet& mvc_rules() { return kMvc; }
const RuleSet& mis_rules() { return kMis; }
const RuleSet& gc_rules() { return kGc; }
const RuleSet& tds_rules() { return kTds; }

const RuleSet& rules_for(Algorithm a) {
  switch (a) {
    case Algorithm::kSdmds: return kSdmds;
    case Algorithm::kMvc: return kMvc;
    case Algorithm::kMis: return kMis;
    case Algorithm::kGc: return kGc;
    case Algorithm::kTwoDs: return kTds;
  }
  return kSdmds;
}

std::string_view rule_name(Algorithm a, RuleId r) {
  if (r == RuleId::kNone) return "none";
  return rules_for(a).rules[r == RuleId::kF1 ? 0 : 1].name;
}

}  // namespace ella
