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

#include "ella/instance.hpp"

#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "ella/random.hpp"
#include "json.hpp"

namespace ella {

using nlohmann::json;

TokenSet::TokenSet(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  std::sort(tokens_.begin(), tokens_.end());
  tokens_.erase(std::unique(tokens_.begin(), tokens_.end()), tokens_.end());
}

std::size_t SdmdsInstance::distinct_demands() const {
  std::set<Token> all;
  for (const auto& d : demands) all.insert(d.begin(), d.end());
  return all.size();
}

SdmdsInstance SdmdsInstance::uniform(Graph g, const std::string& token) {
  const std::size_t n = g.node_count();
  SdmdsInstance inst;
  inst.graph = std::move(g);
  inst.alphabet = {token};
  inst.services.assign(n, TokenSet({0}));
  inst.demands.assign(n, TokenSet({0}));
  return inst;
}

SdmdsInstance SdmdsInstance::random(Graph g, std::size_t alphabet_size, std::uint64_t seed) {
  const std::size_t n = g.node_count();
  SdmdsInstance inst;
  inst.graph = std::move(g);
  for (std::size_t t = 0; t < alphabet_size; ++t) {
    inst.alphabet.push_back(std::string(1, static_cast<char>('a' + t % 26)) +
                            (t >= 26 ? std::to_string(t / 26) : std::string()));
  }
  Rng rng(seed);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Token> s;
    std::vector<Token> d;
    for (Token t = 0; t < alphabet_size; ++t) {
      if (rng.coin()) s.push_back(t);
      if (rng.coin()) d.push_back(t);
    }
    inst.services.emplace_back(std::move(s));
    inst.demands.emplace_back(std::move(d));
  }
  return inst;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError(ParseError::Kind::kMalformedDocument, 0, what);
}

std::uint64_t as_node_count(const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) malformed("\"n\" must be a positive integer");
  return j.get<std::uint64_t>();
}

std::vector<TokenSet> read_token_map(const json& doc, const char* key, std::size_t n,
                                     std::map<std::string, Token>& intern,
                                     std::vector<std::string>& alphabet) {
  std::vector<TokenSet> sets(n);
  if (!doc.contains(key)) return sets;
  const json& map = doc.at(key);
  if (!map.is_object()) malformed(std::string("\"") + key + "\" must be an object");
  for (const auto& [id_text, tokens] : map.items()) {
    std::size_t pos = 0;
    unsigned long long id = 0;
    try {
      id = std::stoull(id_text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != id_text.size() || id < 1 || id > n) {
      throw ParseError(ParseError::Kind::kUnknownNode, 0,
                       std::string("unknown node ") + id_text + " in \"" + key + "\"");
    }
    if (!tokens.is_array()) malformed(std::string("token list for node ") + id_text + " must be an array");
    std::vector<Token> ids;
    for (const json& t : tokens) {
      const std::string name = t.is_string() ? t.get<std::string>() : t.dump();
      auto [it, inserted] = intern.emplace(name, static_cast<Token>(alphabet.size()));
      if (inserted) alphabet.push_back(name);
      ids.push_back(it->second);
    }
    sets[id - 1] = TokenSet(std::move(ids));
  }
  return sets;
}

}  // namespace

SdmdsInstance parse_sdmds_instance(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("instance must be a JSON object");
  if (!doc.contains("n")) malformed("missing \"n\"");
  const std::uint64_t n = as_node_count(doc.at("n"));

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const json& list = doc.at("edges");
    if (!list.is_array()) malformed("\"edges\" must be an array");
    for (const json& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        malformed("each edge must be a pair [u, v]");
      }
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 1 || v < 1 || static_cast<std::uint64_t>(u) > n || static_cast<std::uint64_t>(v) > n) {
        throw ParseError(ParseError::Kind::kOutOfRange, 0, "edge endpoint outside 1..n");
      }
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
  }

  SdmdsInstance inst;
  try {
    inst.graph = Graph::from_edges(n, edges);
  } catch (const GraphError& e) {
    malformed(e.what());
  }
  std::map<std::string, Token> intern;
  inst.services = read_token_map(doc, "services", n, intern, inst.alphabet);
  inst.demands = read_token_map(doc, "demands", n, intern, inst.alphabet);
  return inst;
}

SdmdsInstance parse_sdmds_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_sdmds_instance(in);
}

std::string write_sdmds_instance(const SdmdsInstance& instance) {
  json doc = json::object();
  doc["n"] = instance.graph.node_count();
  json edges = json::array();
  for (const Edge& e : instance.graph.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  auto dump_map = [&](const std::vector<TokenSet>& sets) {
    json map = json::object();
    for (std::size_t v = 0; v < sets.size(); ++v) {
      if (sets[v].empty()) continue;
      std::vector<std::string> list;
      for (Token t : sets[v]) list.push_back(instance.alphabet[t]);
      std::sort(list.begin(), list.end());
      map[std::to_string(v + 1)] = list;
    }
    return map;
  };
  doc["services"] = dump_map(instance.services);
  doc["demands"] = dump_map(instance.demands);
  return doc.dump() + "\n";
}

}  // namespace ella
