// Copyright 2026 The Ancilla Authors
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

#ifndef ANCILLA_TOOLS_CLI_HPP_
#define ANCILLA_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ancilla::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCompute = 1;
inline constexpr int kExitUsage = 2;

inline constexpr char kTableHeader[] = "n,m,value,value_hermitian,starts,tol,seed,wall_time_ms";

struct TableRow {
  int n = 0;
  int m = 0;
  double value = 0.0;
  std::optional<double> value_hermitian;  // absent with --skip-hermitian
  int starts = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::int64_t wall_time_ms = 0;
};

[[nodiscard]] std::string format_csv(const std::vector<TableRow>& rows);
[[nodiscard]] std::string format_json(const std::vector<TableRow>& rows);

/// Runs `ancilla <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ancilla::cli

#endif  // ANCILLA_TOOLS_CLI_HPP_
