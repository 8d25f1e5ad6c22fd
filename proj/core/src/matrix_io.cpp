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

#include "ancilla/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ancilla {

using Index = Eigen::Index;
using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const json& token, const std::string& what) {
  throw MatrixParseError(where + ": " + what + ", got " + token.dump());
}

Index read_dimension(const json& doc, const char* key) {
  if (!doc.contains(key)) throw MatrixParseError(std::string("missing key \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(std::string("\"") + key + "\"", v, "expected a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

double read_component(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, v, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where, v, "expected a finite number");
  return d;
}

}  // namespace

std::string serialize_matrix(const ComplexMatrix& m) {
  if (!all_finite(m)) throw std::invalid_argument("serialize_matrix: non-finite entry");
  json entries = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      entries.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

ComplexMatrix parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MatrixParseError(e.what());
  }
  if (!doc.is_object()) fail("document", doc, "expected an object");
  const Index rows = read_dimension(doc, "rows");
  const Index cols = read_dimension(doc, "cols");
  if (!doc.contains("entries")) throw MatrixParseError("missing key \"entries\"");
  const json& entries = doc.at("entries");
  if (!entries.is_array()) fail("\"entries\"", entries, "expected an array");
  if (static_cast<Index>(entries.size()) != rows * cols) {
    throw MatrixParseError("\"entries\": expected " + std::to_string(rows * cols) +
                           " entries, got " + std::to_string(entries.size()));
  }
  ComplexMatrix m(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    const json& e = entries[static_cast<std::size_t>(k)];
    const std::string where = "entries[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 2) fail(where, e, "expected a [re, im] pair");
    m(k / cols, k % cols) = Complex(read_component(e[0], where + "[0]"),
                                    read_component(e[1], where + "[1]"));
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_matrix(m);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace ancilla
