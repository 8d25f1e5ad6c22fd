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

#include "ancilla/random.hpp"

#include <cmath>
#include <numbers>

namespace ancilla {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(span)) %
                  static_cast<std::int64_t>(span);
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexVector random_unit_vector(Rng& rng, Eigen::Index dim) {
  ComplexVector v(dim);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    norm = v.norm();
  } while (norm == 0.0);
  return v / norm;
}

ComplexMatrix random_ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix random_isometry(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  if (rows < cols) throw DimensionError("random_isometry: rows < cols");
  const ComplexMatrix g = random_ginibre(rng, rows, cols);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so that Q is Haar distributed.
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) { return random_isometry(rng, n, n); }

ComplexMatrix random_density(Rng& rng, Eigen::Index dim, Eigen::Index rank) {
  const ComplexMatrix g = random_ginibre(rng, dim, rank);
  const ComplexMatrix p = g * g.adjoint();
  ComplexMatrix rho = p / p.trace().real();
  // Exact Hermiticity keeps downstream eigensolvers on the self-adjoint path.
  return (rho + rho.adjoint()) / 2.0;
}

RealVector random_probabilities(Rng& rng, Eigen::Index count) {
  RealVector p(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    p(i) = -std::log(u);
  }
  return p / p.sum();
}

}  // namespace ancilla
