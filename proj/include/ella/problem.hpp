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

#ifndef ELLA_PROBLEM_HPP_
#define ELLA_PROBLEM_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ella/graph.hpp"
#include "ella/instance.hpp"
#include "ella/state.hpp"

namespace ella {

enum class Algorithm { kSdmds, kMvc, kMis, kGc, kTwoDs };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kSdmds, Algorithm::kMvc, Algorithm::kMis,
                                               Algorithm::kGc, Algorithm::kTwoDs};

/// "sdmds", "mvc", "mis", "gc", "2ds".
std::string_view algorithm_name(Algorithm a);
/// Accepts the names above plus "mds" (uniform SDMDS). Throws invalid_argument.
Algorithm parse_algorithm(std::string_view name);

inline bool uses_colours(Algorithm a) { return a == Algorithm::kGc; }

/// An algorithm bound to its input: the graph, and for SDMDS the service and
/// demand sets. Cheap to copy; the input is shared and immutable.
class Problem {
 public:
  /// For SDMDS this uses the uniform single-token instance.
  Problem(Algorithm algorithm, Graph graph);
  explicit Problem(SdmdsInstance instance);

  Algorithm algorithm() const noexcept { return algorithm_; }
  const Graph& graph() const noexcept { return data_->instance.graph; }
  const SdmdsInstance& instance() const noexcept { return data_->instance; }
  std::size_t node_count() const noexcept { return graph().node_count(); }
  bool colours() const noexcept { return uses_colours(algorithm_); }

  /// Distance up to which a node's guards read other nodes' states; 0 means
  /// the whole graph.
  unsigned read_radius() const noexcept;

  /// Nodes other than i whose state i's guards may read, ascending.
  std::vector<NodeId> read_set(NodeId i) const;

  /// Precomputed Adj^2 and Adj^4 (2DS only; empty spans otherwise).
  std::span<const NodeId> ball2(NodeId i) const;
  std::span<const NodeId> ball4(NodeId i) const;

 private:
  struct Data {
    SdmdsInstance instance;
    std::vector<std::uint32_t> offsets2, offsets4;
    std::vector<NodeId> nodes2, nodes4;
  };
  void precompute_balls();

  Algorithm algorithm_;
  std::shared_ptr<const Data> data_;
};

/// Initial-state helpers. Random memberships are uniform per node; random
/// colours are uniform in [1, n].
GlobalState all_in(const Problem& p);
GlobalState all_out(const Problem& p);
GlobalState uniform_colour(const Problem& p, Colour c);
GlobalState random_state(const Problem& p, std::uint64_t seed);

/// Reads "(IN,OUT,...)" or "(3,1,2)"; parentheses and whitespace optional.
/// Throws ParseError on malformed input or a size mismatch.
GlobalState parse_state(const Problem& p, const std::string& text);

}  // namespace ella

#endif  // ELLA_PROBLEM_HPP_
