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

#ifndef ANCILLA_CHANNELS_HPP_
#define ANCILLA_CHANNELS_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ancilla/matrix_core.hpp"
#include "ancilla/random.hpp"

namespace ancilla {

/// A map that was required to be completely positive (and possibly trace
/// preserving) is not.
class NotChannelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Linear map Phi from L(C^dim_in) to L(C^dim_out), held as its Choi matrix
 *
 *     J(Phi) = sum_{a,b} E_ab ⊗ Phi(E_ab)
 *
 * on C^dim_in ⊗ C^dim_out (input factor first). The Choi matrix is the
 * canonical representation; Kraus operators and Stinespring isometries are
 * derived from it on demand.
 */
class LinearMapRep {
 public:
  LinearMapRep(Eigen::Index dim_in, Eigen::Index dim_out, ComplexMatrix choi);

  /// Builds J(Phi) by evaluating `action` on every matrix unit E_ab.
  static LinearMapRep from_action(
      Eigen::Index dim_in, Eigen::Index dim_out,
      const std::function<ComplexMatrix(const ComplexMatrix&)>& action);

  [[nodiscard]] Eigen::Index dim_in() const { return dim_in_; }
  [[nodiscard]] Eigen::Index dim_out() const { return dim_out_; }
  [[nodiscard]] const ComplexMatrix& choi() const { return choi_; }

  /// Phi(E_ab), the (a, b) block of the Choi matrix.
  [[nodiscard]] auto choi_block(Eigen::Index a, Eigen::Index b) const {
    return choi_.block(a * dim_out_, b * dim_out_, dim_out_, dim_out_);
  }

  LinearMapRep& operator+=(const LinearMapRep& other);
  LinearMapRep& operator-=(const LinearMapRep& other);
  LinearMapRep& operator*=(double s);

 private:
  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
  ComplexMatrix choi_;
};

LinearMapRep operator+(LinearMapRep a, const LinearMapRep& b);
LinearMapRep operator-(LinearMapRep a, const LinearMapRep& b);
LinearMapRep operator*(double s, LinearMapRep a);

/// lambda * map0 - (1 - lambda) * map1, formed on Choi matrices.
[[nodiscard]] LinearMapRep weighted_difference(double lambda, const LinearMapRep& map0,
                                               const LinearMapRep& map1);

struct KrausSet {
  std::vector<ComplexMatrix> operators;  // each dim_out x dim_in
};

// -----------------------------------------------------------------------------
// Action

/// Phi(X) = Tr_in[J (X^T ⊗ I_out)].
[[nodiscard]] ComplexMatrix apply(const LinearMapRep& map, const ComplexMatrix& x);

/// (Phi ⊗ I)(X) for X on C^dim_in ⊗ C^ancilla_dim; output on C^dim_out ⊗ C^ancilla_dim.
[[nodiscard]] ComplexMatrix apply_extended(const LinearMapRep& map, const ComplexMatrix& x,
                                           Eigen::Index ancilla_dim);

/// (I ⊗ Phi)(X) for X on C^ancilla_dim ⊗ C^dim_in.
[[nodiscard]] ComplexMatrix apply_on_second(const LinearMapRep& map, const ComplexMatrix& x,
                                            Eigen::Index ancilla_dim);

/// Phi^* with <Y, Phi(X)> = <Phi^*(Y), X>.
[[nodiscard]] LinearMapRep adjoint_map(const LinearMapRep& map);

/// f ∘ g (apply g first).
[[nodiscard]] LinearMapRep compose(const LinearMapRep& f, const LinearMapRep& g);

// -----------------------------------------------------------------------------
// Channel properties

inline constexpr double kChannelTol = 1e-9;

/// Human-readable list of CP/TP failures (empty for a channel).
[[nodiscard]] std::vector<std::string> channel_defects(const LinearMapRep& map,
                                                       double tol = kChannelTol);
[[nodiscard]] bool is_channel(const LinearMapRep& map, double tol = kChannelTol);
[[nodiscard]] bool is_completely_positive(const LinearMapRep& map, double tol = kChannelTol);

/**
 * Kraus operators from the eigendecomposition of J(Phi), ordered by
 * nonincreasing Choi eigenvalue. Eigenvalues at or below 1e-10 times the top
 * eigenvalue are dropped. Throws NotChannelError if Phi is not CP.
 */
[[nodiscard]] KrausSet kraus_from_choi(const LinearMapRep& map);

/// Isometry A = sum_i K_i ⊗ e_i from C^dim_in into C^dim_out ⊗ C^r with
/// Phi(X) = Tr_env(A X A^*) and r = rank J(Phi).
[[nodiscard]] ComplexMatrix stinespring_isometry(const LinearMapRep& map);

/// Psi(X) = Tr_out(A X A^*) for the isometry from stinespring_isometry().
[[nodiscard]] LinearMapRep complementary_channel(const LinearMapRep& map);

// -----------------------------------------------------------------------------
// Constructors

[[nodiscard]] LinearMapRep identity_map(Eigen::Index n);
[[nodiscard]] LinearMapRep transpose_map(Eigen::Index n);
/// Omega(X) = Tr(X) I_n (not trace preserving for n > 1).
[[nodiscard]] LinearMapRep trace_identity_map(Eigen::Index n);
/// X -> Tr(X) I_n / n.
[[nodiscard]] LinearMapRep completely_depolarizing(Eigen::Index n);
/// X -> Tr(X) sigma.
[[nodiscard]] LinearMapRep replacement_channel(Eigen::Index dim_in, const ComplexMatrix& sigma);
/// X -> V X V^*.
[[nodiscard]] LinearMapRep conjugation_map(const ComplexMatrix& v);
/// X -> U (X ⊗ sigma) U^*, U an isometry from C^n ⊗ C^r.
[[nodiscard]] LinearMapRep dilated_channel(const ComplexMatrix& u, const ComplexMatrix& sigma);
/// X -> Tr_env(A X A^*) for A: C^dim_in -> C^dim_out ⊗ C^env.
[[nodiscard]] LinearMapRep channel_from_isometry(const ComplexMatrix& a, Eigen::Index dim_out,
                                                 Eigen::Index env_dim);
/// Channel with a Haar-random Stinespring isometry into C^dim_out ⊗ C^env_dim.
[[nodiscard]] LinearMapRep random_channel(Rng& rng, Eigen::Index dim_in, Eigen::Index dim_out,
                                          Eigen::Index env_dim);

/// R_i on C^{n_1} ⊗ ... ⊗ C^{n_k}: trace out everything but subsystem i (1-based).
[[nodiscard]] LinearMapRep reduction_map(const std::vector<Eigen::Index>& dims, int subsystem);

/// Phi^(0) = (Omega + T)/(n+1) for alpha = 0, Phi^(1) = (Omega - T)/(n-1) for alpha = 1.
[[nodiscard]] LinearMapRep werner_holevo(Eigen::Index n, int alpha);

/// (1/k) sum_i E_ii ⊗ Phi^(alpha)(R_i(X)), from (C^n)^{⊗k} to C^k ⊗ C^n.
[[nodiscard]] LinearMapRep gamma_channel(Eigen::Index n, int k, int alpha);

/// sum_i E_ii ⊗ T(R_i(X)); Hermiticity preserving but not CP.
[[nodiscard]] LinearMapRep psi_map(Eigen::Index n, int k);

/// lambda_n = (n + 1) / (2n).
[[nodiscard]] double werner_holevo_lambda(Eigen::Index n);

}  // namespace ancilla

#endif  // ANCILLA_CHANNELS_HPP_
