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

#include "ella/guards.hpp"

#include <algorithm>

namespace ella {

void GuardMemo::reset(std::size_t n) {
  if (n != n_ || epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    n_ = n;
    stamps_.assign(kSlotCount * n, 0);
    values_.assign(kSlotCount * n, 0);
    witness_.assign(n, {0, 0});
    epoch_ = 0;
  }
  ++epoch_;
}

// --- SDMDS -----------------------------------------------------------------

bool GuardEvaluator::sdmds_addable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kAddable, i)) return *m;
  const SdmdsInstance& inst = problem_.instance();
  bool result = false;
  if (!view_.in(i)) {
    for (Token d : inst.demands_of(i)) {
      const auto nb = graph_.neighbors(i);
      const bool served = std::any_of(nb.begin(), nb.end(), [&](NodeId j) {
        return inst.services_of(j).contains(d) && view_.in(j);
      });
      if (!served) {
        result = true;
        break;
      }
    }
  }
  return memo_.put(GuardMemo::kAddable, i, result);
}

bool GuardEvaluator::sdmds_removable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kRemovable, i)) return *m;
  const SdmdsInstance& inst = problem_.instance();
  auto result = [&] {
    for (Token d : inst.demands_of(i)) {
      bool served = false;
      for (NodeId j : graph_.neighbors(i)) {
        if (inst.services_of(j).contains(d) && view_.in(j)) {
          served = true;
          break;
        }
      }
      if (!served) return false;
    }
    // An IN neighbour dominates itself; only OUT neighbours depend on i.
    for (NodeId j : graph_.neighbors(i)) {
      if (view_.in(j)) continue;
      for (Token d : inst.demands_of(j)) {
        if (!inst.services_of(i).contains(d)) continue;
        bool other = false;
        for (NodeId k : graph_.neighbors(j)) {
          if (k != i && inst.services_of(k).contains(d) && view_.in(k)) {
            other = true;
            break;
          }
        }
        if (!other) return false;
      }
    }
    return true;
  }();
  return memo_.put(GuardMemo::kRemovable, i, result);
}

std::vector<NodeId> GuardEvaluator::sdmds_dominators_of(NodeId i) {
  const SdmdsInstance& inst = problem_.instance();
  std::vector<NodeId> result;
  for (NodeId j : graph_.neighbors(i)) {
    if (!view_.in(j)) continue;
    const auto& demands = inst.demands_of(i);
    if (std::any_of(demands.begin(), demands.end(), [&](Token d) { return inst.services_of(j).contains(d); })) {
      result.push_back(j);
    }
  }
  if (view_.in(i)) result.insert(std::lower_bound(result.begin(), result.end(), i), i);
  return result;
}

bool GuardEvaluator::sdmds_impedensable(NodeId i) {
  if (!view_.in(i) || !sdmds_removable(i)) return false;
  const SdmdsInstance& inst = problem_.instance();
  const std::int64_t my_id = graph_.id(i);
  // k blocks i when it co-serves d to j, is removable and has the higher ID.
  auto blocks = [&](NodeId k, Token d) {
    return k != i && view_.in(k) && inst.services_of(k).contains(d) && graph_.id(k) > my_id && sdmds_removable(k);
  };
  for (NodeId j : graph_.neighbors(i)) {
    for (Token d : inst.demands_of(j)) {
      if (!inst.services_of(i).contains(d)) continue;
      if (blocks(j, d)) return false;
      for (NodeId k : graph_.neighbors(j)) {
        if (blocks(k, d)) return false;
      }
    }
  }
  return true;
}

// --- MVC -------------------------------------------------------------------

bool GuardEvaluator::mvc_removable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kRemovable, i)) return *m;
  const auto nb = graph_.neighbors(i);
  return memo_.put(GuardMemo::kRemovable, i,
                   std::all_of(nb.begin(), nb.end(), [&](NodeId j) { return view_.in(j); }));
}

bool GuardEvaluator::mvc_addable(NodeId i) {
  if (view_.in(i)) return false;
  const auto nb = graph_.neighbors(i);
  return std::any_of(nb.begin(), nb.end(), [&](NodeId j) { return !view_.in(j); });
}

bool GuardEvaluator::mvc_impedensable(NodeId i) {
  if (!view_.in(i) || !mvc_removable(i)) return false;
  const std::int64_t my_id = graph_.id(i);
  for (NodeId j : graph_.neighbors(i)) {
    if (graph_.id(j) > my_id && mvc_removable(j)) return false;
  }
  return true;
}

// --- MIS -------------------------------------------------------------------

bool GuardEvaluator::mis_addable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kAddable, i)) return *m;
  const auto nb = graph_.neighbors(i);
  return memo_.put(GuardMemo::kAddable, i,
                   std::none_of(nb.begin(), nb.end(), [&](NodeId j) { return view_.in(j); }));
}

bool GuardEvaluator::mis_removable(NodeId i) {
  if (!view_.in(i)) return false;
  const auto nb = graph_.neighbors(i);
  return std::any_of(nb.begin(), nb.end(), [&](NodeId j) { return view_.in(j); });
}

bool GuardEvaluator::mis_impedensable(NodeId i) {
  if (view_.in(i) || !mis_addable(i)) return false;
  const std::int64_t my_id = graph_.id(i);
  for (NodeId j : graph_.neighbors(i)) {
    if (graph_.id(j) > my_id && mis_addable(j)) return false;
  }
  return true;
}

// --- GC --------------------------------------------------------------------

bool GuardEvaluator::gc_conflicted(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kConflicted, i)) return *m;
  const Colour c = view_.colour(i);
  const auto nb = graph_.neighbors(i);
  return memo_.put(GuardMemo::kConflicted, i,
                   std::any_of(nb.begin(), nb.end(), [&](NodeId j) { return view_.colour(j) == c; }));
}

Colour GuardEvaluator::gc_min_free(NodeId i) {
  const Colour c = view_.colour(i);
  scratch_.clear();
  for (NodeId j : graph_.neighbors(i)) {
    const Colour cj = view_.colour(j);
    if (cj >= 1 && cj < c) scratch_.push_back(cj);
  }
  std::sort(scratch_.begin(), scratch_.end());
  Colour want = 1;
  for (Colour used : scratch_) {
    if (used > want) break;
    if (used == want) ++want;
  }
  return want < c ? want : c;
}

bool GuardEvaluator::gc_subtractable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kSubtractable, i)) return *m;
  return memo_.put(GuardMemo::kSubtractable, i, gc_min_free(i) < view_.colour(i));
}

bool GuardEvaluator::gc_impedensable(NodeId i) {
  if (gc_conflicted(i) || !gc_subtractable(i)) return false;
  const std::int64_t my_id = graph_.id(i);
  for (NodeId j = 1; j <= graph_.node_count(); ++j) {
    if (j == i) continue;
    if (gc_conflicted(j)) return false;
    if (graph_.id(j) > my_id && gc_subtractable(j)) return false;
  }
  return true;
}

// --- 2DS -------------------------------------------------------------------

bool GuardEvaluator::tds_addable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kAddable, i)) return *m;
  bool result = false;
  if (!view_.in(i)) {
    const auto nb = graph_.neighbors(i);
    result = std::none_of(nb.begin(), nb.end(), [&](NodeId j) { return view_.in(j); });
  }
  return memo_.put(GuardMemo::kAddable, i, result);
}

bool GuardEvaluator::tds_removable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kRemovable, i)) return *m;
  auto result = [&] {
    if (!view_.in(i)) return false;
    auto dominated_without_i = [&](NodeId j) {
      if (j != i && view_.in(j)) return true;
      for (NodeId k : graph_.neighbors(j)) {
        if (k != i && view_.in(k)) return true;
      }
      return false;
    };
    if (!dominated_without_i(i)) return false;
    for (NodeId j : graph_.neighbors(i)) {
      if (!dominated_without_i(j)) return false;
    }
    return true;
  }();
  return memo_.put(GuardMemo::kRemovable, i, result);
}

bool GuardEvaluator::tds_dominated_after_swap(NodeId q, NodeId i, NodeId j, NodeId k) {
  if (q == i || graph_.adjacent(q, i)) return true;
  if (q != j && q != k && view_.in(q)) return true;
  for (NodeId r : graph_.neighbors(q)) {
    if (r != j && r != k && view_.in(r)) return true;
  }
  return false;
}

bool GuardEvaluator::tds_two_addable(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kTwoAddable, i)) return *m;
  auto result = [&] {
    if (view_.in(i)) return false;
    const auto ball = problem_.ball2(i);
    if (tds_addable(i) || tds_removable(i)) return false;
    for (NodeId j : ball) {
      if (tds_addable(j) || tds_removable(j)) return false;
    }
    std::vector<NodeId> members;
    for (NodeId j : ball) {
      if (view_.in(j)) members.push_back(j);
    }
    auto closed_ok = [&](NodeId c, NodeId j, NodeId k) {
      if (!tds_dominated_after_swap(c, i, j, k)) return false;
      for (NodeId q : graph_.neighbors(c)) {
        if (!tds_dominated_after_swap(q, i, j, k)) return false;
      }
      return true;
    };
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const NodeId j = members[a];
        const NodeId k = members[b];
        if (closed_ok(j, j, k) && closed_ok(k, j, k)) {
          memo_.witness(i) = {j, k};
          return true;
        }
      }
    }
    return false;
  }();
  return memo_.put(GuardMemo::kTwoAddable, i, result);
}

std::optional<std::pair<NodeId, NodeId>> GuardEvaluator::tds_witness(NodeId i) {
  if (!tds_two_addable(i)) return std::nullopt;
  return memo_.witness(i);
}

bool GuardEvaluator::tds_unsatisfied(NodeId i) {
  if (auto m = memo_.get(GuardMemo::kUnsatisfied, i)) return *m;
  return memo_.put(GuardMemo::kUnsatisfied, i, tds_removable(i) || tds_two_addable(i));
}

bool GuardEvaluator::tds_impedensable(NodeId i) {
  if (!tds_unsatisfied(i)) return false;
  const std::int64_t my_id = graph_.id(i);
  for (NodeId j : problem_.ball4(i)) {
    if (graph_.id(j) > my_id && tds_unsatisfied(j)) return false;
  }
  return true;
}

// --- dispatch --------------------------------------------------------------

bool GuardEvaluator::f1(NodeId i) {
  switch (problem_.algorithm()) {
    case Algorithm::kSdmds: return sdmds_addable(i);
    case Algorithm::kMvc: return mvc_addable(i);
    case Algorithm::kMis: return mis_removable(i);
    case Algorithm::kGc: return gc_conflicted(i);
    case Algorithm::kTwoDs: return tds_addable(i);
  }
  return false;
}

bool GuardEvaluator::f2(NodeId i) {
  switch (problem_.algorithm()) {
    case Algorithm::kSdmds: return sdmds_impedensable(i);
    case Algorithm::kMvc: return mvc_impedensable(i);
    case Algorithm::kMis: return mis_impedensable(i);
    case Algorithm::kGc: return gc_impedensable(i);
    case Algorithm::kTwoDs: return tds_impedensable(i);
  }
  return false;
}

// --- conveniences ----------------------------------------------------------

namespace {

template <typename F>
auto with_evaluator(const Problem& p, const GlobalState& s, F&& f) {
  GuardMemo memo;
  memo.reset(p.node_count());
  GuardEvaluator ev(p, StateView(s), memo);
  return f(ev);
}

}  // namespace

bool sdmds_addable(const Problem& p, const GlobalState& s, NodeId i) {
  return with_evaluator(p, s, [&](GuardEvaluator& ev) { return ev.sdmds_addable(i); });
}
bool sdmds_removable(const Problem& p, const GlobalState& s, NodeId i) {
  return with_evaluator(p, s, [&](GuardEvaluator& ev) { return ev.sdmds_removable(i); });
}
std::vector<NodeId> sdmds_dominators_of(const Problem& p, const GlobalState& s, NodeId i) {
  return with_evaluator(p, s, [&](GuardEvaluator& ev) { return ev.sdmds_dominators_of(i); });
}
bool sdmds_impedensable(const Problem& p, const GlobalState& s, NodeId i) {
  return with_evaluator(p, s, [&](GuardEvaluator& ev) { return ev.sdmds_impedensable(i); });
}
bool tds_two_addable(const Problem& p, const GlobalState& s, NodeId i) {
  return with_evaluator(p, s, [&](GuardEvaluator& ev) { return ev.tds_two_addable(i); });
}

std::vector<NodeId> impedensable_set(const Problem& p, const GlobalState& s) {
  return with_evaluator(p, s, [&](GuardEvaluator& ev) {
    std::vector<NodeId> out;
    for (NodeId v = 1; v <= p.node_count(); ++v) {
      if (ev.f2(v)) out.push_back(v);
    }
    return out;
  });
}

}  // namespace ella
