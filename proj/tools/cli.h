// Copyright 2026 The Noise Eater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOISE_EATER_TOOLS_CLI_H_
#define NOISE_EATER_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace noise_eater::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

/// Result table. Cells are JSON scalars (numbers, or strings for labels).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  /// Scalar results reported next to the table (visibility estimates etc.).
  nlohmann::json summary = nlohmann::json::object();
  nlohmann::json meta = nlohmann::json::object();
};

/// One header row, then one line per row; numbers use 17 significant digits.
void write_csv(const Table& table, std::ostream& os);
/// {"columns": [...], "rows": [[...]], "summary": {...}, "meta": {...}}.
void write_json(const Table& table, std::ostream& os);

/// Values of "x", "x,y,z" or "start:stop:step" (stop included when on grid).
std::vector<double> parse_values(const std::string& text);

/// Runs the command line `args` (args[0] is the program name). Tables go to
/// `out` unless --out is given; diagnostics and summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noise_eater::cli

#endif  // NOISE_EATER_TOOLS_CLI_H_
