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

#ifndef ANCILLA_STRUCTURE_HPP_
#define ANCILLA_STRUCTURE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ancilla/channels.hpp"
#include "ancilla/tensor_ops.hpp"

namespace ancilla {

inline constexpr double kStructureTol = 1e-6;
inline constexpr double kResidualTol = 1e-8;

// -----------------------------------------------------------------------------
// Maximal entanglement and decompositions

/// True iff unvec(u, n, m) has exactly min(n, m) nonzero singular values,
/// all equal to 1/sqrt(min(n, m)) within `tol`. Throws if u is not a unit vector.
[[nodiscard]] bool is_max_entangled(const ComplexVector& u, Eigen::Index n, Eigen::Index m,
                                    double tol = kStructureTol);

/**
 * X = (I_n ⊗ U)(tau_n ⊗ sigma)(I_n ⊗ V^*) on C^n ⊗ C^m.
 *
 * U and V are isometries from C^n ⊗ C^r into C^m, sigma is a diagonal
 * density with nonincreasing entries, and `residual` is the Frobenius
 * distance between the reconstruction and the operator it was extracted from.
 */
struct StructureDecomposition {
  int r = 0;
  ComplexMatrix sigma;
  ComplexMatrix u;
  ComplexMatrix v;
  double residual = 0.0;
};

/// (I_n ⊗ U)(tau_n ⊗ sigma)(I_n ⊗ V^*).
[[nodiscard]] ComplexMatrix reconstruct(const StructureDecomposition& d, Eigen::Index n);

/**
 * Decomposes X on C^n ⊗ C^m (with ||X||_1 = 1) in the form above, or returns
 * nullopt when X does not have that form. The negativity must reach n - tol,
 * every singular vector must be maximally entangled, the isometries must have
 * orthogonal ranges and the reconstruction residual must be at most 1e-8.
 * Positive semidefinite X yields V = U. Throws std::invalid_argument when
 * ||X||_1 differs from 1 by more than 1e-8.
 */
[[nodiscard]] std::optional<StructureDecomposition> extract_structure(
    const ComplexMatrix& x, Eigen::Index n, Eigen::Index m, double tol = kStructureTol);

struct MultipartiteStructure {
  /// Decomposition with X_1 ⊗ ... ⊗ X_k treated as a single system.
  std::optional<StructureDecomposition> decomposition;
  /// Negativity of (R_i ⊗ I)(X) across the X_i | Y cut, one per subsystem.
  std::vector<double> subsystem_negativities;
  bool per_subsystem_check = false;  // every negativity reaches n_i - tol
  bool global_check = false;         // decomposition found
  [[nodiscard]] bool consistent() const { return per_subsystem_check == global_check; }
};

/// X on X_1 ⊗ ... ⊗ X_k ⊗ C^m, with `dims` the layout of X_1 ... X_k.
[[nodiscard]] MultipartiteStructure extract_structure_multipartite(const ComplexMatrix& x,
                                                                  const SystemLayout& dims,
                                                                  Eigen::Index m,
                                                                  double tol = kStructureTol);

/// ||(Psi_{n,k} ⊗ I_m)(X)||_1 = sum_i ||(T ⊗ I)((R_i ⊗ I)(X))||_1 for X on (C^n)^{⊗k} ⊗ C^m.
[[nodiscard]] double psi_value(const ComplexMatrix& x, Eigen::Index n, int k, Eigen::Index m);

// -----------------------------------------------------------------------------
// Weak entanglement measures

struct WeakMeasure {
  std::string name;
  /// Value on a density operator on C^n ⊗ C^m.
  std::function<double(const ComplexMatrix&, Eigen::Index, Eigen::Index)> evaluate;
  /// Maximum over C^n ⊗ C^m with n <= m.
  std::function<double(Eigen::Index)> max_function;
};

/// ||(T ⊗ I)(rho)||_1 with g(n) = n.
[[nodiscard]] WeakMeasure negativity_measure();

/// S(Tr_1 rho) - S(rho) in bits with g(n) = log2(n).
[[nodiscard]] WeakMeasure coherent_information_measure();

/**
 * Samples random states, pure states and channels on the second subsystem
 * and checks the four weak-measure properties: the bound g(n), pure
 * maximizers exactly the maximally entangled states, monotonicity under
 * channels on the second subsystem, and pure-state convexity. Returns one
 * message per violation.
 */
[[nodiscard]] std::vector<std::string> check_weak_measure_axioms(const WeakMeasure& measure,
                                                                 Eigen::Index n, Eigen::Index m,
                                                                 int samples, std::uint64_t seed);

// -----------------------------------------------------------------------------
// Reversibility

struct ReversibilityReport {
  std::optional<StructureDecomposition> structure;
  bool trace_norm_preserving = false;
  bool fidelity_preserving = false;
  bool complement_constant = false;
  std::optional<LinearMapRep> left_inverse;
  bool left_inverse_verified = false;
  /// Frobenius distance between J(left_inverse ∘ map) and J(identity), when built.
  double left_inverse_error = 0.0;
  bool verdict = false;

  /// All five indicators agree with the verdict.
  [[nodiscard]] bool consistent() const;
};

/**
 * Tests whether a channel has a channel left inverse, using five independent
 * indicators: the structure of J/n, sampled trace-norm preservation, sampled
 * fidelity preservation on pure pairs, constancy of the complementary
 * channel, and an explicitly built left inverse. Throws NotChannelError for
 * maps that are not channels within 1e-6.
 */
[[nodiscard]] ReversibilityReport reversibility_check(const LinearMapRep& map, int samples,
                                                      std::uint64_t seed,
                                                      double tol = kStructureTol);

/// Xi(Y) = Tr_r(U^* Y U) + <I - U U^*, Y> I/n for an isometry U: C^n ⊗ C^r -> C^m.
[[nodiscard]] LinearMapRep left_inverse_channel(const ComplexMatrix& u, Eigen::Index n);

// -----------------------------------------------------------------------------
// Miscellaneous characterizations

/**
 * For mutually orthogonal operators A_i: returns true when
 * ||sum A_i||_1 = sum ||A_i||_1 within tol, in which case A_i A_j^* and
 * A_i^* A_j vanish for i != j; returns false otherwise. Throws
 * std::invalid_argument for non-orthogonal input and std::logic_error if
 * the norm equality and the vanishing products disagree.
 */
[[nodiscard]] bool triangle_equality_consequence(const std::vector<ComplexMatrix>& operators,
                                                 double tol = 1e-9);

/// n + floor(m/n), the best value of a product strategy, for n <= m < n^2.
[[nodiscard]] int independent_strategy_value(int n, int m);

/// max{a + b : 1 <= a, b <= n, a b <= m}.
[[nodiscard]] int independent_strategy_brute_force(int n, int m);

/// F(Tr_2 uu^*, Tr_2 vv^*) == ||Tr_1 uv^*||_1 within tol, for u, v on a bipartite layout.
[[nodiscard]] bool fidelity_partialtrace_identity_check(const ComplexVector& u,
                                                        const ComplexVector& v,
                                                        const SystemLayout& layout,
                                                        double tol = 1e-9);

}  // namespace ancilla

#endif  // ANCILLA_STRUCTURE_HPP_
