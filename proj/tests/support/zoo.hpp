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


#ifndef ELLA_TESTS_SUPPORT_ZOO_HPP_
#define ELLA_TESTS_SUPPORT_ZOO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ella/graph.hpp"
#include "ella/instance.hpp"
#include "ella/problem.hpp"
#include "ella/random.hpp"
#include "ella/state.hpp"

namespace ella::testing {

/// Two disjoint edges {1,2}, {3,4}.
Graph g4();
Graph k2();
Graph triangle();
/// Star with centre 1 and leaves 2..4.
Graph k13();

/// One representative per isomorphism class of simple graphs on n nodes.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

/// Every representative for n = 1..max_n.
std::vector<Graph> graph_zoo(std::size_t max_n);

/// Random G(n, m) with n in [lo, hi] and m uniform in its admissible range.
Graph random_graph(Rng& rng, std::size_t lo, std::size_t hi);

/// Random state for p drawn from rng; colours in [1, max_colour].
GlobalState random_state_from(const Problem& p, Rng& rng, Colour max_colour);

/// Membership state from a bitmask (bit v-1 set means IN).
GlobalState from_mask(std::size_t n, std::uint32_t mask);

/// "1-2 3-4" style label for failure messages.
std::string describe(const Graph& g);

}  // namespace ella::testing

#endif  // ELLA_TESTS_SUPPORT_ZOO_HPP_
