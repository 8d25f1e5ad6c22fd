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

#ifndef ANCILLA_MATRIX_IO_HPP_
#define ANCILLA_MATRIX_IO_HPP_

#include <stdexcept>
#include <string>

#include "ancilla/matrix_core.hpp"

namespace ancilla {

/// Malformed matrix document. The message names the first offending token.
class MatrixParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Matrix file format, a JSON document
 *
 *     {"rows": R, "cols": C, "entries": [[re, im], ...]}
 *
 * with R*C entries in row-major order. Numbers are written in shortest
 * round-trip form, so parse(serialize(M)) == M bit for bit.
 */
[[nodiscard]] std::string serialize_matrix(const ComplexMatrix& m);
[[nodiscard]] ComplexMatrix parse_matrix(const std::string& text);

/// Throws std::runtime_error if the file cannot be opened, MatrixParseError if malformed.
[[nodiscard]] ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

}  // namespace ancilla

#endif  // ANCILLA_MATRIX_IO_HPP_
