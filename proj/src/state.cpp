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

#include "ella/state.hpp"

#include <algorithm>
#include <cstdio>

namespace ella {

GlobalState GlobalState::memberships(std::initializer_list<bool> in) {
  std::vector<LocalState> values;
  values.reserve(in.size());
  for (bool b : in) values.push_back(b ? LocalState::in() : LocalState::out());
  return GlobalState(std::move(values));
}

GlobalState GlobalState::colours(std::initializer_list<Colour> colours) {
  std::vector<LocalState> values;
  values.reserve(colours.size());
  for (Colour c : colours) values.push_back(LocalState::colour(c));
  return GlobalState(std::move(values));
}

std::size_t GlobalState::count_in() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](LocalState s) { return s.is_in(); }));
}

std::string format_state(const GlobalState& s, bool colours) {
  std::string out = "(";
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (v > 0) out += ',';
    const LocalState x = s.values()[v];
    if (colours) {
      out += std::to_string(x.colour());
    } else {
      out += x.is_in() ? "IN" : "OUT";
    }
  }
  return out + ")";
}

std::string state_digest(const GlobalState& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (LocalState x : s.values()) {
    auto raw = static_cast<std::uint64_t>(x.raw());
    for (int b = 0; b < 8; ++b) {
      h ^= (raw >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ella
