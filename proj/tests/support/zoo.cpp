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


#include "support/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ella::testing {

Graph g4() {
  const Edge e[] = {{1, 2}, {3, 4}};
  return Graph::from_edges(4, e);
}

Graph k2() { return complete_graph(2); }

Graph triangle() { return complete_graph(3); }

Graph k13() { return star_graph(3); }

namespace {

// Edge slot of the pair (a, b), a < b, in 0-based lexicographic order.
std::size_t slot(std::size_t n, std::size_t a, std::size_t b) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::uint32_t canonical(std::size_t n, std::uint32_t code) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  do {
    std::uint32_t mapped = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!(code >> slot(n, a, b) & 1U)) continue;
        const std::size_t x = std::min(perm[a], perm[b]);
        const std::size_t y = std::max(perm[a], perm[b]);
        mapped |= 1U << slot(n, x, y);
      }
    }
    best = std::min(best, mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  const std::size_t slots = n * (n - 1) / 2;
  std::set<std::uint32_t> seen;
  for (std::uint32_t code = 0; code < (1U << slots); ++code) seen.insert(canonical(n, code));
  std::vector<Graph> out;
  for (std::uint32_t code : seen) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (code >> slot(n, a, b) & 1U) {
          edges.push_back({static_cast<NodeId>(a + 1), static_cast<NodeId>(b + 1)});
        }
      }
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

std::vector<Graph> graph_zoo(std::size_t max_n) {
  std::vector<Graph> all;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = nonisomorphic_graphs(n);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

Graph random_graph(Rng& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = rng.between(lo, hi);
  const std::size_t m = rng.between(0, n * (n - 1) / 2);
  return gen_gnm(n, m, rng.next());
}

GlobalState random_state_from(const Problem& p, Rng& rng, Colour max_colour) {
  GlobalState s(p.node_count(), LocalState::out());
  for (NodeId v = 1; v <= p.node_count(); ++v) {
    if (p.colours()) {
      s[v] = LocalState::colour(static_cast<Colour>(rng.between(1, static_cast<std::uint64_t>(max_colour))));
    } else {
      s[v] = rng.coin() ? LocalState::in() : LocalState::out();
    }
  }
  return s;
}

GlobalState from_mask(std::size_t n, std::uint32_t mask) {
  GlobalState s(n, LocalState::out());
  for (NodeId v = 1; v <= n; ++v) {
    if (mask >> (v - 1) & 1U) s[v] = LocalState::in();
  }
  return s;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.node_count() << " {";
  for (const Edge& e : g.edges()) os << ' ' << e.u << '-' << e.v;
  os << " }";
  return os.str();
}

}  // namespace ella::testing
