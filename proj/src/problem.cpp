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

#include "ella/problem.hpp"

#include <cctype>
#include <stdexcept>

#include "ella/random.hpp"

namespace ella {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kSdmds: return "sdmds";
    case Algorithm::kMvc: return "mvc";
    case Algorithm::kMis: return "mis";
    case Algorithm::kGc: return "gc";
    case Algorithm::kTwoDs: return "2ds";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "sdmds" || name == "mds") return Algorithm::kSdmds;
  if (name == "mvc") return Algorithm::kMvc;
  if (name == "mis") return Algorithm::kMis;
  if (name == "gc") return Algorithm::kGc;
  if (name == "2ds") return Algorithm::kTwoDs;
  throw std::invalid_argument("unknown algorithm \"" + std::string(name) + "\"");
}

Problem::Problem(Algorithm algorithm, Graph graph) : algorithm_(algorithm) {
  auto data = std::make_shared<Data>();
  if (algorithm == Algorithm::kSdmds) {
    data->instance = SdmdsInstance::uniform(std::move(graph));
  } else {
    const std::size_t n = graph.node_count();
    data->instance.graph = std::move(graph);
    data->instance.services.resize(n);
    data->instance.demands.resize(n);
  }
  data_ = std::move(data);
  precompute_balls();
}

Problem::Problem(SdmdsInstance instance) : algorithm_(Algorithm::kSdmds) {
  auto data = std::make_shared<Data>();
  data->instance = std::move(instance);
  data_ = std::move(data);
}

void Problem::precompute_balls() {
  if (algorithm_ != Algorithm::kTwoDs) return;
  auto data = std::make_shared<Data>(*data_);
  const Graph& g = data->instance.graph;
  data->offsets2.assign(1, 0);
  data->offsets4.assign(1, 0);
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    const auto b2 = k_neighborhood(g, v, 2);
    const auto b4 = k_neighborhood(g, v, 4);
    data->nodes2.insert(data->nodes2.end(), b2.begin(), b2.end());
    data->nodes4.insert(data->nodes4.end(), b4.begin(), b4.end());
    data->offsets2.push_back(static_cast<std::uint32_t>(data->nodes2.size()));
    data->offsets4.push_back(static_cast<std::uint32_t>(data->nodes4.size()));
  }
  data_ = std::move(data);
}

unsigned Problem::read_radius() const noexcept {
  switch (algorithm_) {
    case Algorithm::kSdmds: return 4;
    case Algorithm::kMvc: return 2;
    case Algorithm::kMis: return 2;
    case Algorithm::kGc: return 0;
    case Algorithm::kTwoDs: return 8;
  }
  return 0;
}

std::vector<NodeId> Problem::read_set(NodeId i) const {
  const unsigned r = read_radius();
  if (r == 0) {
    std::vector<NodeId> all;
    all.reserve(node_count() - 1);
    for (NodeId v = 1; v <= node_count(); ++v) {
      if (v != i) all.push_back(v);
    }
    return all;
  }
  return k_neighborhood(graph(), i, r);
}

std::span<const NodeId> Problem::ball2(NodeId i) const {
  if (data_->offsets2.size() <= i) return {};
  return {data_->nodes2.data() + data_->offsets2[i - 1], data_->nodes2.data() + data_->offsets2[i]};
}

std::span<const NodeId> Problem::ball4(NodeId i) const {
  if (data_->offsets4.size() <= i) return {};
  return {data_->nodes4.data() + data_->offsets4[i - 1], data_->nodes4.data() + data_->offsets4[i]};
}

GlobalState all_in(const Problem& p) { return GlobalState(p.node_count(), LocalState::in()); }
GlobalState all_out(const Problem& p) { return GlobalState(p.node_count(), LocalState::out()); }
GlobalState uniform_colour(const Problem& p, Colour c) {
  return GlobalState(p.node_count(), LocalState::colour(c));
}

GlobalState random_state(const Problem& p, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = p.node_count();
  std::vector<LocalState> values(n);
  for (auto& v : values) {
    v = p.colours() ? LocalState::colour(static_cast<Colour>(rng.between(1, n)))
                    : (rng.coin() ? LocalState::in() : LocalState::out());
  }
  return GlobalState(std::move(values));
}

GlobalState parse_state(const Problem& p, const std::string& text) {
  std::vector<LocalState> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (p.colours()) {
      std::size_t pos = 0;
      long long c = 0;
      try {
        c = std::stoll(token, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != token.size() || c < 1) {
        throw ParseError(ParseError::Kind::kMalformedDocument, 0, "bad colour \"" + token + "\"");
      }
      values.push_back(LocalState::colour(c));
    } else if (token == "IN" || token == "in" || token == "1") {
      values.push_back(LocalState::in());
    } else if (token == "OUT" || token == "out" || token == "0") {
      values.push_back(LocalState::out());
    } else {
      throw ParseError(ParseError::Kind::kMalformedDocument, 0, "bad membership \"" + token + "\"");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (values.size() != p.node_count()) {
    throw ParseError(ParseError::Kind::kMalformedDocument, 0,
                     "state has " + std::to_string(values.size()) + " entries, graph has " +
                         std::to_string(p.node_count()) + " nodes");
  }
  return GlobalState(std::move(values));
}

}  // namespace ella
