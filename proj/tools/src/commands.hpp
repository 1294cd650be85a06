/*
 * Copyright 2026 The zmpo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Command implementations behind the zmpo command-line tool. Each command
// takes a plain options struct so it can run in-process from tests; run_cli()
// wires them to flags.

#ifndef ZMPO_TOOLS_COMMANDS_HPP_
#define ZMPO_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zmpo/error.hpp"
#include "zmpo/oracle.hpp"

namespace zmpo::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitNumericError = 3,
};

// A request that would exceed the memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Parse errors cover malformed input and out-of-domain arguments; numeric
// errors cover LAPACK failures, degenerate states and resource limits.
int exit_code_for(const std::exception& e);

// Budget from ZMPO_MEMORY_BUDGET_MB (default 4096 MiB). Throws
// ParameterError when the variable is set but not a positive integer.
std::uint64_t memory_budget_bytes();

// Throws ResourceError when `bytes` exceeds the budget.
void check_memory(std::uint64_t bytes, const std::string& what);

// Rough peak working set of a transform at size n, in bytes.
std::uint64_t estimate_transform_bytes(std::size_t n);

struct WindowOptions {
  // Unset fields pick the full grid when N <= count, else a coarse window
  // covering the grid.
  std::optional<std::uint64_t> k0, l0, stride;
  std::size_t count = 256;
};

struct TransformOptions {
  std::string input;
  std::size_t n = 0;  // 0: take n from the input file
  TransformParams params;
  std::filesystem::path out;
  WindowOptions window;
  bool verify = false;
  std::optional<std::filesystem::path> mpo_cache;
};

// Writes <out>/scan.csv and <out>/manifest.json. Nothing is written when the
// input fails to load.
void run_transform(const TransformOptions& o, std::ostream& log);

struct BenchOptions {
  std::string suite;  // bonds, error or runtime
  std::filesystem::path out;
  std::size_t n_min = 0;  // 0: suite default
  std::size_t n_max = 0;
  std::size_t error_n = 10;
  std::vector<double> taus;  // empty: suite default
  std::vector<std::string> signals;
  double omega_r = kTwoPi;
  double omega_i = kTwoPi;
  double tau = 1e-15;
};

// Writes <out>/bench_<suite>.csv (one BenchRecord per row) and
// <out>/bench_<suite>_summary.json (fits and checks).
void run_bench(const BenchOptions& o, std::ostream& log);

struct PolesOptions {
  std::string input;
  std::size_t n = 0;
  TransformParams params;
  std::optional<std::filesystem::path> out;  // unset: JSON to `result`
  double threshold = 0.5;
  std::uint64_t initial_stride = 0;
  std::size_t count = 256;
  std::size_t levels = 2;
  std::size_t zoom_cells = 8;
  std::size_t max_candidates = 16;
  bool dump_levels = false;
  std::optional<std::filesystem::path> mpo_cache;
};

// Candidate list as JSON: to <out>/poles.json when `out` is set, otherwise
// to `result`. Level dumps go to <out>/level<i>_window<j>.csv.
void run_poles(const PolesOptions& o, std::ostream& result, std::ostream& log);

// Parses argv and dispatches. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zmpo::tools

#endif  // ZMPO_TOOLS_COMMANDS_HPP_
