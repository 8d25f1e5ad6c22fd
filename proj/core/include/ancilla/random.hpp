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

#ifndef ANCILLA_RANDOM_HPP_
#define ANCILLA_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "ancilla/matrix_core.hpp"

namespace ancilla {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x);

/**
 * Seed for stream `stream` of a run seeded with `seed`:
 * splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15)).
 *
 * Every optimizer start and every sampled trial draws from its own stream,
 * so results do not depend on how work is scheduled across threads.
 */
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/**
 * Reproducible random source.
 *
 * Engine is std::mt19937_64, whose output sequence is fixed by the standard.
 * Uniforms take the top 53 bits; normals use the Box-Muller transform, so the
 * stream is identical across standard library implementations (unlike
 * std::normal_distribution).
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_seed(seed, stream)) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double normal();
  /// Standard complex normal: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// Uniformly random point on the unit sphere of C^dim.
[[nodiscard]] ComplexVector random_unit_vector(Rng& rng, Eigen::Index dim);

/// Matrix of i.i.d. standard complex normal entries.
[[nodiscard]] ComplexMatrix random_ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-random isometry (rows >= cols) from a phase-corrected QR decomposition.
[[nodiscard]] ComplexMatrix random_isometry(Rng& rng, Eigen::Index rows, Eigen::Index cols);
[[nodiscard]] ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

/// G G^* / Tr(G G^*) for a dim x rank Ginibre G (rank = dim gives full rank).
[[nodiscard]] ComplexMatrix random_density(Rng& rng, Eigen::Index dim, Eigen::Index rank);

/// Random probability vector (normalized exponentials, i.e. flat Dirichlet).
[[nodiscard]] RealVector random_probabilities(Rng& rng, Eigen::Index count);

}  // namespace ancilla

#endif  // ANCILLA_RANDOM_HPP_
