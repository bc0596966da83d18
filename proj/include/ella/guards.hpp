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

#ifndef ELLA_GUARDS_HPP_
#define ELLA_GUARDS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ella/check.hpp"
#include "ella/problem.hpp"
#include "ella/state.hpp"

namespace ella {

/// What one node sees: a state value per node. Slots outside the reader's
/// read set hold LocalState::unknown().
class StateView {
 public:
  StateView() = default;
  explicit StateView(std::span<const LocalState> values) : values_(values) {}
  explicit StateView(const GlobalState& s) : values_(s.values()) {}

  LocalState operator[](NodeId v) const {
    const LocalState x = values_[v - 1];
    ELLA_DCHECK(!x.is_unknown(), "guard read node " + std::to_string(v) + " outside the read set");
    return x;
  }
  bool in(NodeId v) const { return (*this)[v].is_in(); }
  Colour colour(NodeId v) const { return (*this)[v].colour(); }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::span<const LocalState> values_;
};

/// Cache of per-node macro values for one view. `reset` invalidates
/// everything in O(1).
class GuardMemo {
 public:
  enum Slot : unsigned { kAddable, kRemovable, kConflicted, kSubtractable, kTwoAddable, kUnsatisfied, kSlotCount };

  void reset(std::size_t n);

  std::optional<bool> get(Slot slot, NodeId v) const {
    const std::size_t at = slot * n_ + (v - 1);
    if (stamps_[at] != epoch_) return std::nullopt;
    return values_[at] != 0;
  }
  bool put(Slot slot, NodeId v, bool value) {
    const std::size_t at = slot * n_ + (v - 1);
    stamps_[at] = epoch_;
    values_[at] = value ? 1 : 0;
    return value;
  }
  std::pair<NodeId, NodeId>& witness(NodeId v) { return witness_[v - 1]; }

 private:
  std::uint32_t epoch_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> stamps_;
  std::vector<std::uint8_t> values_;
  std::vector<std::pair<NodeId, NodeId>> witness_;
};

/// Evaluates every guard macro of the five algorithms against one view.
/// The memo must have been reset for this view.
class GuardEvaluator {
 public:
  GuardEvaluator(const Problem& problem, StateView view, GuardMemo& memo)
      : problem_(problem), graph_(problem.graph()), view_(view), memo_(memo) {}

  const Problem& problem() const noexcept { return problem_; }
  const StateView& view() const noexcept { return view_; }

  // Service-demand minimal dominating set.
  bool sdmds_addable(NodeId i);
  bool sdmds_removable(NodeId i);
  std::vector<NodeId> sdmds_dominators_of(NodeId i);
  bool sdmds_impedensable(NodeId i);

  // Minimal vertex cover.
  bool mvc_removable(NodeId i);
  bool mvc_addable(NodeId i);
  bool mvc_impedensable(NodeId i);

  // Maximal independent set.
  bool mis_addable(NodeId i);
  bool mis_removable(NodeId i);
  bool mis_impedensable(NodeId i);

  // Colouring.
  bool gc_conflicted(NodeId i);
  bool gc_subtractable(NodeId i);
  bool gc_impedensable(NodeId i);
  /// Least colour in [1, colour(i)-1] unused by neighbours; colour(i) if none.
  Colour gc_min_free(NodeId i);

  // 2-dominating set.
  bool tds_addable(NodeId i);
  bool tds_removable(NodeId i);
  bool tds_two_addable(NodeId i);
  /// Lexicographically smallest (j, k) when tds_two_addable(i) holds.
  std::optional<std::pair<NodeId, NodeId>> tds_witness(NodeId i);
  bool tds_unsatisfied(NodeId i);
  bool tds_impedensable(NodeId i);

  /// First and second rule guard of the bound algorithm.
  bool f1(NodeId i);
  bool f2(NodeId i);

 private:
  bool tds_dominated_after_swap(NodeId q, NodeId i, NodeId j, NodeId k);

  const Problem& problem_;
  const Graph& graph_;
  StateView view_;
  GuardMemo& memo_;
  std::vector<Colour> scratch_;
};

// Single-shot conveniences over an exact global state.
bool sdmds_addable(const Problem& p, const GlobalState& s, NodeId i);
bool sdmds_removable(const Problem& p, const GlobalState& s, NodeId i);
std::vector<NodeId> sdmds_dominators_of(const Problem& p, const GlobalState& s, NodeId i);
bool sdmds_impedensable(const Problem& p, const GlobalState& s, NodeId i);
bool tds_two_addable(const Problem& p, const GlobalState& s, NodeId i);

/// Nodes whose F2 guard holds in s, ascending.
std::vector<NodeId> impedensable_set(const Problem& p, const GlobalState& s);

}  // namespace ella

#endif  // ELLA_GUARDS_HPP_
