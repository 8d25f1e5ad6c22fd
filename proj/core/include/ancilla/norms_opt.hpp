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

#ifndef ANCILLA_NORMS_OPT_HPP_
#define ANCILLA_NORMS_OPT_HPP_

#include <cstdint>
#include <vector>

#include "ancilla/channels.hpp"
#include "ancilla/tensor_ops.hpp"

namespace ancilla {

/// ||(T ⊗ I)(X)||_1 with the transpose applied to one subsystem (1-based).
[[nodiscard]] double negativity(const ComplexMatrix& x, const SystemLayout& layout,
                                int transposed_subsystem = 1);

struct OptConfig {
  int num_starts = 1000;
  double stop_tol = 1e-5;
  int max_iters = 10000;
  std::uint64_t seed = 0;
  /// Worker threads; 0 reads ANCILLA_THREADS and falls back to the hardware count.
  int threads = 0;
};

/// Outcome of one start, or the best start of a multi-start run.
struct OptResult {
  double value = 0.0;        // ||(Phi ⊗ I)(u v^*)||_1 at the witness
  ComplexVector witness_u;   // on C^dim_in ⊗ C^ancilla, index a*m + c
  ComplexVector witness_v;   // equals witness_u in Hermitian mode
  int iterations = 0;
  bool converged = false;
  int start_index = 0;
  std::uint64_t seed_used = 0;  // stream seed of this start
  /// Largest drop of the objective between successive iterations (0 if monotone).
  double max_decrease = 0.0;
};

enum class InputMode {
  kGeneral,    // X = u v^*
  kHermitian,  // X = u u^*
};

/**
 * Runs every start of the alternating maximization of ||(Phi ⊗ I_m)(X)||_1
 * over rank-one X and returns the per-start results in start order.
 *
 * Start s draws its initial vectors from Rng(cfg.seed, s), so the results do
 * not depend on the number of threads.
 */
[[nodiscard]] std::vector<OptResult> optimize_all_starts(const LinearMapRep& map,
                                                         Eigen::Index ancilla_dim,
                                                         const OptConfig& cfg, InputMode mode);

/// Highest value, ties to the lowest start index. Throws on an empty list.
[[nodiscard]] OptResult best_result(const std::vector<OptResult>& results);

/// Lower bound on ||Phi ⊗ I_m||_1 (max over starts of the general mode).
[[nodiscard]] OptResult induced_trace_norm_lb(const LinearMapRep& map, Eigen::Index ancilla_dim,
                                              const OptConfig& cfg);

/// Lower bound on the same norm restricted to Hermitian inputs.
[[nodiscard]] OptResult induced_trace_norm_hermitian_lb(const LinearMapRep& map,
                                                        Eigen::Index ancilla_dim,
                                                        const OptConfig& cfg);

/// Lower bound on the diamond norm (ancilla dimension = dim_in).
[[nodiscard]] OptResult diamond_norm_lb(const LinearMapRep& map, const OptConfig& cfg);

/// 1/2 + 1/2 * lower bound on ||lambda Phi0 - (1 - lambda) Phi1 ⊗ I_m||_1.
[[nodiscard]] double discrimination_value(const LinearMapRep& map0, const LinearMapRep& map1,
                                          double lambda, Eigen::Index ancilla_dim,
                                          const OptConfig& cfg);

/// ||(Phi ⊗ I_m)(u v^*)||_1 evaluated directly from the Choi matrix.
[[nodiscard]] double rank_one_objective(const LinearMapRep& map, Eigen::Index ancilla_dim,
                                        const ComplexVector& u, const ComplexVector& v);

/// Pads a witness on C^dim_in ⊗ C^m with zeros to C^dim_in ⊗ C^new_m.
[[nodiscard]] ComplexVector embed_witness(const ComplexVector& u, Eigen::Index dim_in,
                                          Eigen::Index m, Eigen::Index new_m);

/// Thread count used when OptConfig::threads is 0.
[[nodiscard]] int default_thread_count();

}  // namespace ancilla

#endif  // ANCILLA_NORMS_OPT_HPP_
