// Copyright 2026 The tabalg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TABALG_CLI_HPP
#define TABALG_CLI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace tabalg::cli {

enum class Command { Chars, Spectrum, Krein, Ngon, Verify };
enum class Parity { Odd, Even };
enum class Format { Json, Csv };

std::optional<Command> parse_command(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitRootCountMismatch = 3;
inline constexpr int kExitVerificationFailed = 4;

struct RunConfig {
  Command command = Command::Chars;
  int d = 5;
  double k = 2.0;
  std::optional<double> alpha;
  Parity parity = Parity::Odd;
  Format format = Format::Json;
  double tol = 1e-12;
  int grid_density = 64;
  std::optional<std::string> output_path;
  /// Inclusive d range evaluated concurrently; output ordered by d.
  std::optional<std::pair<int, int>> sweep;
};

/// Serialized report plus exit code. `out` is the stdout payload, `err`
/// holds one JSON object per line describing errors or warnings.
struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one configuration end to end. Never throws for parameter or
/// numerical failures; those map onto exit codes 2/3/4 (1 for anything
/// else). Identical configs produce byte-identical output.
RunResult run(const RunConfig& config);

/// Parses "lo..hi".
std::optional<std::pair<int, int>> parse_sweep(std::string_view text);

}  // namespace tabalg::cli

#endif  // TABALG_CLI_HPP
