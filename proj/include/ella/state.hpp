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

#ifndef ELLA_STATE_HPP_
#define ELLA_STATE_HPP_

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ella/graph.hpp"

namespace ella {

using Colour = std::int64_t;

/// One node's variables: either IN/OUT membership or a positive colour.
/// Which one applies is fixed by the problem being run.
class LocalState {
 public:
  constexpr LocalState() = default;

  static constexpr LocalState in() { return LocalState(1); }
  static constexpr LocalState out() { return LocalState(0); }
  static constexpr LocalState colour(Colour c) { return LocalState(c); }
  /// Marks snapshot slots the reader did not fetch.
  static constexpr LocalState unknown() { return LocalState(std::numeric_limits<std::int64_t>::min()); }

  constexpr bool is_in() const { return raw_ == 1; }
  constexpr bool is_out() const { return raw_ == 0; }
  constexpr Colour colour() const { return raw_; }
  constexpr std::int64_t raw() const { return raw_; }
  constexpr bool is_unknown() const { return raw_ == std::numeric_limits<std::int64_t>::min(); }

  friend constexpr bool operator==(LocalState, LocalState) = default;

 private:
  constexpr explicit LocalState(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = 0;
};

/// Per-node local states indexed by node ID 1..n.
class GlobalState {
 public:
  GlobalState() = default;
  GlobalState(std::size_t n, LocalState fill) : values_(n, fill) {}
  explicit GlobalState(std::vector<LocalState> values) : values_(std::move(values)) {}

  /// `true` means IN.
  static GlobalState memberships(std::initializer_list<bool> in);
  static GlobalState colours(std::initializer_list<Colour> colours);

  std::size_t size() const noexcept { return values_.size(); }
  LocalState operator[](NodeId v) const { return values_[v - 1]; }
  LocalState& operator[](NodeId v) { return values_[v - 1]; }
  std::span<const LocalState> values() const noexcept { return values_; }

  /// Number of IN nodes (membership problems).
  std::size_t count_in() const;

  friend bool operator==(const GlobalState&, const GlobalState&) = default;

 private:
  std::vector<LocalState> values_;
};

/// "(IN,OUT,IN)" for membership problems, "(3,1,2)" for colourings.
std::string format_state(const GlobalState& s, bool colours);

/// 64-bit FNV-1a digest of the raw values, as 16 hex digits.
std::string state_digest(const GlobalState& s);

}  // namespace ella

#endif  // ELLA_STATE_HPP_
