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

#include "ella/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "ella/random.hpp"

namespace ella {

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<NodeId>::max() - 1) throw GraphError("node count too large");
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u));
    g.edges_.push_back(Edge::normalized(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }

  std::vector<std::uint32_t> degree(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (std::size_t v = 1; v <= n; ++v) g.offsets_[v] = g.offsets_[v - 1] + degree[v];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u - 1]++] = e.v;
    g.adjacency_[fill[e.v - 1]++] = e.u;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v - 1], g.adjacency_.begin() + g.offsets_[v]);
  }
  return g;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_ids(std::vector<std::int64_t> ids) const {
  if (ids.size() != n_) throw GraphError("identifier count does not match node count");
  auto sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("identifiers must be distinct");
  }
  if (!sorted.empty() && sorted.front() < 1) throw GraphError("identifiers must be positive");
  Graph g = *this;
  g.ids_ = std::move(ids);
  return g;
}

std::vector<NodeId> k_neighborhood(const Graph& g, NodeId i, unsigned k) {
  if (!g.contains(i)) throw std::out_of_range("unknown node " + std::to_string(i));
  std::vector<unsigned> dist(g.node_count() + 1, std::numeric_limits<unsigned>::max());
  std::vector<NodeId> frontier{i};
  std::vector<NodeId> result;
  dist[i] = 0;
  for (unsigned level = 1; level <= k && !frontier.empty(); ++level) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] != std::numeric_limits<unsigned>::max()) continue;
        dist[w] = level;
        next.push_back(w);
        result.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

bool is_skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly `count` unsigned integers from `line`; false on any extra or
// malformed token.
bool read_exactly(const std::string& line, std::size_t count, std::vector<std::uint64_t>& out) {
  std::istringstream ss(line);
  out.clear();
  std::string token;
  while (ss >> token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return false;
    }
    try {
      out.push_back(std::stoull(token));
    } catch (const std::exception&) {
      return false;
    }
  }
  return out.size() == count;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> nums;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (!have_header) {
      if (!read_exactly(line, 2, nums) || nums[0] == 0) {
        throw ParseError(ParseError::Kind::kMalformedHeader, line_no, "expected header \"n m\" with n >= 1");
      }
      n = nums[0];
      m = nums[1];
      if (n > std::numeric_limits<NodeId>::max() - 1) {
        throw ParseError(ParseError::Kind::kMalformedHeader, line_no, "node count too large");
      }
      if (m > n * (n - 1) / 2) {
        throw ParseError(ParseError::Kind::kMalformedHeader, line_no, "edge count exceeds n(n-1)/2");
      }
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(ParseError::Kind::kEdgeCount, line_no,
                       "more than the declared " + std::to_string(m) + " edges");
    }
    if (!read_exactly(line, 2, nums)) {
      throw ParseError(ParseError::Kind::kMalformedEdge, line_no, "expected edge \"u v\"");
    }
    const auto u = nums[0];
    const auto v = nums[1];
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(ParseError::Kind::kOutOfRange, line_no,
                       "node ID outside 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(ParseError::Kind::kSelfLoop, line_no, "self-loop at node " + std::to_string(u));
    const Edge e = Edge::normalized(static_cast<NodeId>(u), static_cast<NodeId>(v));
    if (!seen.insert((std::uint64_t{e.u} << 32) | e.v).second) {
      throw ParseError(ParseError::Kind::kDuplicateEdge, line_no,
                       "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(ParseError::Kind::kMalformedHeader, 0, "missing header \"n m\"");
  if (edges.size() != m) {
    throw ParseError(ParseError::Kind::kEdgeCount, 0,
                     "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = n < 2 ? 0 : std::uint64_t{n} * (n - 1) / 2;
  if (m > pairs) {
    throw std::out_of_range("m = " + std::to_string(m) + " exceeds n(n-1)/2 = " + std::to_string(pairs));
  }
  // Floyd's subset sampling over the pair indices.
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picks;
  picks.reserve(m);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t pick = chosen.contains(t) ? j : t;
    chosen.insert(pick);
    picks.push_back(pick);
  }
  std::sort(picks.begin(), picks.end());

  std::vector<Edge> edges;
  edges.reserve(m);
  NodeId u = 1;
  std::uint64_t row_start = 0;
  for (std::uint64_t index : picks) {
    while (index >= row_start + (n - u)) {
      row_start += n - u;
      ++u;
    }
    edges.push_back({u, static_cast<NodeId>(u + 1 + (index - row_start))});
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 1; u < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId leaf = 2; leaf <= leaves + 1; ++leaf) edges.push_back({1, leaf});
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace ella
