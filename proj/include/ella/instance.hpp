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

#ifndef ELLA_INSTANCE_HPP_
#define ELLA_INSTANCE_HPP_

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ella/graph.hpp"

namespace ella {

/// Interned service/demand token.
using Token = std::uint32_t;

/// Small sorted set of tokens.
class TokenSet {
 public:
  TokenSet() = default;
  explicit TokenSet(std::vector<Token> tokens);

  bool contains(Token t) const { return std::binary_search(tokens_.begin(), tokens_.end(), t); }
  bool empty() const noexcept { return tokens_.empty(); }
  std::size_t size() const noexcept { return tokens_.size(); }
  auto begin() const noexcept { return tokens_.begin(); }
  auto end() const noexcept { return tokens_.end(); }

  friend bool operator==(const TokenSet&, const TokenSet&) = default;

 private:
  std::vector<Token> tokens_;
};

/// A graph plus per-node service set S_i and demand set D_i.
struct SdmdsInstance {
  Graph graph;
  std::vector<std::string> alphabet;  // token -> name
  std::vector<TokenSet> services;     // index v-1
  std::vector<TokenSet> demands;      // index v-1

  const TokenSet& services_of(NodeId v) const { return services[v - 1]; }
  const TokenSet& demands_of(NodeId v) const { return demands[v - 1]; }

  /// Number of distinct demand tokens across all nodes.
  std::size_t distinct_demands() const;

  /// Every node serves and demands the single token `token`; this is plain
  /// minimal dominating set.
  static SdmdsInstance uniform(Graph g, const std::string& token = "x");

  /// Each token of an `alphabet_size` alphabet lands in each S_i and D_i
  /// independently with probability 1/2.
  static SdmdsInstance random(Graph g, std::size_t alphabet_size, std::uint64_t seed);

  friend bool operator==(const SdmdsInstance&, const SdmdsInstance&) = default;
};

/// JSON document {"n", "edges", "services", "demands"}; nodes without an
/// entry get empty sets. Throws ParseError.
SdmdsInstance parse_sdmds_instance(std::istream& in);
SdmdsInstance parse_sdmds_instance(const std::string& text);
std::string write_sdmds_instance(const SdmdsInstance& instance);

}  // namespace ella

#endif  // ELLA_INSTANCE_HPP_
