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


#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <numeric>

#include "ella/graph.hpp"
#include "support/zoo.hpp"

namespace ella {
namespace {

using testing::g4;

// Plain BFS distances, used as the reference for k_neighborhood.
std::vector<NodeId> bfs_ball(const Graph& g, NodeId src, unsigned k) {
  std::vector<int> dist(g.node_count() + 1, -1);
  std::deque<NodeId> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    const NodeId v = q.front();
    q.pop_front();
    for (NodeId u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (v != src && dist[v] > 0 && dist[v] <= static_cast<int>(k)) out.push_back(v);
  }
  return out;
}

ParseError::Kind parse_kind(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError::Kind::kMalformedDocument;
}

TEST(ParseEdgeList, ReadsTwoDisjointEdges) {
  const Graph g = parse_edge_list("4 2\n1 2\n3 4");
  EXPECT_EQ(g.node_count(), 4u);
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{3, 4}));
  EXPECT_EQ(g, g4());
}

TEST(ParseEdgeList, SingleIsolatedNode) {
  const Graph g = parse_edge_list("1 0");
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.degree(1), 0u);
}

TEST(ParseEdgeList, SkipsCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# header next\n\n3 2\n# edge\n1 2\n\n2 3\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseEdgeList, RejectsSelfLoop) {
  try {
    parse_edge_list("2 1\n1 1");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::kSelfLoop);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseEdgeList, DistinctErrorKinds) {
  EXPECT_EQ(parse_kind("four 2\n"), ParseError::Kind::kMalformedHeader);
  EXPECT_EQ(parse_kind(""), ParseError::Kind::kMalformedHeader);
  EXPECT_EQ(parse_kind("3 1\n1 x\n"), ParseError::Kind::kMalformedEdge);
  EXPECT_EQ(parse_kind("3 1\n1 4\n"), ParseError::Kind::kOutOfRange);
  EXPECT_EQ(parse_kind("3 1\n0 2\n"), ParseError::Kind::kOutOfRange);
  EXPECT_EQ(parse_kind("3 2\n1 2\n2 1\n"), ParseError::Kind::kDuplicateEdge);
  EXPECT_EQ(parse_kind("3 2\n1 2\n"), ParseError::Kind::kEdgeCount);
  EXPECT_EQ(parse_kind("3 1\n1 2\n2 3\n"), ParseError::Kind::kEdgeCount);
}

TEST(ParseEdgeList, ErrorNamesTheLine) {
  try {
    parse_edge_list("# c\n3 2\n1 2\n1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::kDuplicateEdge);
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(Graph, FromEdgesValidates) {
  const Edge loop[] = {{2, 2}};
  EXPECT_THROW(Graph::from_edges(3, loop), GraphError);
  const Edge dup[] = {{1, 2}, {2, 1}};
  EXPECT_THROW(Graph::from_edges(3, dup), GraphError);
  const Edge far[] = {{1, 9}};
  EXPECT_THROW(Graph::from_edges(3, far), GraphError);
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
  const Graph g = gen_gnm(30, 90, 5);
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (NodeId u : nb) {
      EXPECT_TRUE(g.adjacent(u, v));
      EXPECT_NE(u, v);
    }
  }
}

TEST(Graph, WithIdsRequiresDistinctPositive) {
  EXPECT_THROW(path_graph(3).with_ids({1, 1, 2}), GraphError);
  EXPECT_THROW(path_graph(3).with_ids({0, 1, 2}), GraphError);
  EXPECT_THROW(path_graph(3).with_ids({1, 2}), GraphError);
  const Graph g = path_graph(3).with_ids({10, 30, 20});
  EXPECT_EQ(g.id(2), 30);
  EXPECT_EQ(path_graph(3).id(3), 3);
}

TEST(GenGnm, CompleteGraphIsForced) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) EXPECT_EQ(gen_gnm(4, 6, seed), complete_graph(4));
}

TEST(GenGnm, EmptyGraph) {
  const Graph g = gen_gnm(3, 0, 17);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GenGnm, SameSeedSameGraph) {
  EXPECT_EQ(gen_gnm(10, 20, 1), gen_gnm(10, 20, 1));
  EXPECT_EQ(write_edge_list(gen_gnm(10, 20, 1)), write_edge_list(gen_gnm(10, 20, 1)));
  EXPECT_NE(gen_gnm(10, 20, 1), gen_gnm(10, 20, 2));
}

TEST(GenGnm, RejectsTooManyEdges) { EXPECT_THROW(gen_gnm(4, 7, 1), std::out_of_range); }

TEST(GenGnm, DegreeSumIsTwiceEdgeCount) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 1, 40);
    std::size_t sum = 0;
    for (NodeId v = 1; v <= g.node_count(); ++v) sum += g.degree(v);
    ASSERT_EQ(sum, 2 * g.edge_count()) << testing::describe(g);
  }
}

TEST(GenGnm, RoughlyUniformOverEdges) {
  // Each of the 10 slots of K5 should appear in about m/10 of the draws.
  std::vector<int> hits(25, 0);
  const int draws = 4000;
  for (int s = 0; s < draws; ++s) {
    const Graph g = gen_gnm(5, 3, s);
    for (const Edge& e : g.edges()) ++hits[(e.u - 1) * 5 + (e.v - 1)];
  }
  for (NodeId u = 1; u <= 5; ++u) {
    for (NodeId v = u + 1; v <= 5; ++v) {
      EXPECT_NEAR(hits[(u - 1) * 5 + (v - 1)], draws * 3 / 10, 120) << u << "-" << v;
    }
  }
}

TEST(EdgeList, RoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 1, 30);
    ASSERT_EQ(parse_edge_list(write_edge_list(g)), g) << testing::describe(g);
  }
}

TEST(KNeighborhood, PathDistanceTwo) {
  EXPECT_EQ(k_neighborhood(path_graph(3), 1, 2), (std::vector<NodeId>{2, 3}));
  EXPECT_EQ(k_neighborhood(path_graph(3), 1, 1), (std::vector<NodeId>{2}));
}

TEST(KNeighborhood, StaysInsideComponent) {
  EXPECT_EQ(k_neighborhood(g4(), 1, 4), (std::vector<NodeId>{2}));
  EXPECT_EQ(k_neighborhood(g4(), 4, 4), bfs_ball(g4(), 4, 4));
}

TEST(KNeighborhood, K2) { EXPECT_EQ(k_neighborhood(testing::k2(), 1, 1), (std::vector<NodeId>{2})); }

TEST(KNeighborhood, UnknownNodeThrows) { EXPECT_THROW(k_neighborhood(g4(), 5, 1), std::out_of_range); }

TEST(KNeighborhood, MatchesBfsAndIsMonotone) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 1, 25);
    for (NodeId i = 1; i <= g.node_count(); ++i) {
      const auto one = k_neighborhood(g, i, 1);
      ASSERT_TRUE(std::equal(one.begin(), one.end(), g.neighbors(i).begin(), g.neighbors(i).end()));
      for (unsigned k = 1; k <= 5; ++k) {
        const auto ball = k_neighborhood(g, i, k);
        ASSERT_EQ(ball, bfs_ball(g, i, k)) << testing::describe(g) << " i=" << i << " k=" << k;
        const auto next = k_neighborhood(g, i, k + 1);
        ASSERT_TRUE(std::includes(next.begin(), next.end(), ball.begin(), ball.end()));
      }
    }
  }
}

}  // namespace
}  // namespace ella
