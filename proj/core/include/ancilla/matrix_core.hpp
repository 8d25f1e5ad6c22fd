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

#ifndef ANCILLA_MATRIX_CORE_HPP_
#define ANCILLA_MATRIX_CORE_HPP_

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ancilla {

using Complex = std::complex<double>;

/// Dense complex matrix; the carrier for states, operators and Choi matrices.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// -----------------------------------------------------------------------------
// Errors

/// Shapes or layouts that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator expected to be positive semidefinite has a negative eigenvalue
/// beyond the clamping threshold.
class NotPsdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A decomposition failed to converge or produced non-finite output.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -----------------------------------------------------------------------------
// Decompositions

/// Thin singular value decomposition M = left * diag(singular_values) * right^*.
struct SvdResult {
  ComplexMatrix left;
  RealVector singular_values;  // nonincreasing
  ComplexMatrix right;

  /// Number of singular values above `rel_tol * singular_values(0)`.
  [[nodiscard]] Eigen::Index rank(double rel_tol = 1e-10) const;
};

struct HermitianEigen {
  RealVector values;  // nondecreasing
  ComplexMatrix vectors;
};

[[nodiscard]] SvdResult svd(const ComplexMatrix& m);
[[nodiscard]] RealVector singular_values(const ComplexMatrix& m);

/// Eigendecomposition of the Hermitian part of `h` (only the lower triangle is
/// read, so callers should pass a matrix that is Hermitian to begin with).
[[nodiscard]] HermitianEigen hermitian_eigen(const ComplexMatrix& h);

// -----------------------------------------------------------------------------
// Norms and inner products

/// Hilbert-Schmidt inner product <A, B> = Tr(A^* B).
[[nodiscard]] Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

[[nodiscard]] double trace_norm(const ComplexMatrix& m);
[[nodiscard]] double frobenius_norm(const ComplexMatrix& m);
[[nodiscard]] double spectral_norm(const ComplexMatrix& m);

/// Unitary U = W Z^* from M = W S Z^*, so that <U, M> = ||M||_1.
/// Degenerate singular subspaces are not gauge-fixed.
[[nodiscard]] ComplexMatrix optimal_unitary(const ComplexMatrix& m);

// -----------------------------------------------------------------------------
// Positive operators

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenClampTol = 1e-10;
inline constexpr double kNotPsdTol = 1e-8;

/// Positive square root. Eigenvalues in [-1e-8, 0) are clamped to zero;
/// anything more negative raises NotPsdError.
[[nodiscard]] ComplexMatrix psd_sqrt(const ComplexMatrix& p);

/// F(P, Q) = || sqrt(P) sqrt(Q) ||_1.
[[nodiscard]] double fidelity(const ComplexMatrix& p, const ComplexMatrix& q);

/// von Neumann entropy in bits, eigenvalues below 1e-12 contribute zero.
[[nodiscard]] double von_neumann_entropy(const ComplexMatrix& rho);

[[nodiscard]] bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
[[nodiscard]] bool is_psd(const ComplexMatrix& m, double tol = 1e-10);

/// M^* M = I within `tol` in spectral norm; requires rows >= cols.
[[nodiscard]] bool is_isometry(const ComplexMatrix& m, double tol = 1e-10);

[[nodiscard]] bool all_finite(const ComplexMatrix& m);

/// Kronecker product with the standard ordering (a ⊗ b)(i*rb+k, j*cb+l) = a(i,j) b(k,l).
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

[[nodiscard]] std::string shape_string(const ComplexMatrix& m);

}  // namespace ancilla

#endif  // ANCILLA_MATRIX_CORE_HPP_
