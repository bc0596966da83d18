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

#ifndef ELLA_TOOLS_COMMANDS_HPP_
#define ELLA_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ella::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // also parse errors and size caps
inline constexpr int kExitNonTermination = 3;
inline constexpr int kExitOracle = 4;

struct GenOptions {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  std::string out;  // empty: stdout
};

struct RunOptions {
  std::string algo;
  std::string graph;
  std::string instance;
  std::string scheduler = "sync";
  unsigned staleness = 0;
  std::uint64_t seed = 1;
  std::string init = "random";
  std::uint64_t max_steps = 0;
  std::string trace;
  bool parallel = false;
};

struct BenchOptions {
  std::vector<std::string> algos{"mis"};
  std::size_t n = 100;
  std::string m = "200:1000:200";  // list "a,b,c" or range "lo:hi:step"
  std::size_t trials = 16;
  std::vector<std::string> schedulers{"sync", "amr"};
  std::vector<unsigned> staleness{4};
  std::uint64_t seed = 1;
  std::string out;  // empty: stdout
  bool timing = true;
};

struct VerifyOptions {
  std::string algo;
  std::string graph;
  std::string instance;
  std::string dot;
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err);
int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);

/// Parses "a,b,c" or "lo:hi:step" (inclusive). Throws invalid_argument.
std::vector<std::size_t> parse_count_list(const std::string& text);

/// Full command-line entry point.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ella::cli

#endif  // ELLA_TOOLS_COMMANDS_HPP_
