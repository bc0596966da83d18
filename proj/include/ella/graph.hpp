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

#ifndef ELLA_GRAPH_HPP_
#define ELLA_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ella {

/// Node identifiers are 1..n. Guards break ties by comparing them.
using NodeId = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge normalized(NodeId a, NodeId b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised when an edge set violates the simple-graph invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the edge-list reader. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedHeader,
    kMalformedEdge,
    kOutOfRange,
    kSelfLoop,
    kDuplicateEdge,
    kEdgeCount,
    kMalformedDocument,
    kUnknownNode,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Immutable undirected simple graph on nodes 1..n with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Validates: endpoints in 1..n, no self-loops, no duplicates.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool contains(NodeId v) const noexcept { return v >= 1 && v <= n_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v - 1], adjacency_.data() + offsets_[v]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v] - offsets_[v - 1]; }
  bool adjacent(NodeId u, NodeId v) const;

  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Value used in ID comparisons and in the colouring action. Equal to the
  /// node index unless relabelled with `with_ids`.
  std::int64_t id(NodeId v) const { return ids_.empty() ? std::int64_t{v} : ids_[v - 1]; }

  /// Same topology with distinct positive identifiers (index i-1 -> node i).
  Graph with_ids(std::vector<std::int64_t> ids) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.ids_ == b.ids_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::int64_t> ids_;
};

/// All nodes j != i within shortest-path distance k of i, ascending.
std::vector<NodeId> k_neighborhood(const Graph& g, NodeId i, unsigned k);

/// Reads "n m" followed by m lines "u v". '#' lines and blank lines are skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Uniform simple graph with exactly m edges, fully determined by the seed.
/// Throws std::out_of_range when m > n(n-1)/2.
Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Named small graphs used throughout tests and examples.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // node 1 is the centre

}  // namespace ella

#endif  // ELLA_GRAPH_HPP_
