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

#include "ancilla/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ancilla {

namespace {

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) {
    throw NumericalError(std::string(what) + ": input has non-finite entries");
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         shape_string(m));
  }
}

}  // namespace

Eigen::Index SvdResult::rank(double rel_tol) const {
  if (singular_values.size() == 0 || singular_values(0) <= 0.0) return 0;
  const double cut = rel_tol * singular_values(0);
  Eigen::Index r = 0;
  while (r < singular_values.size() && singular_values(r) > cut) ++r;
  return r;
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  Eigen::BDCSVD<ComplexMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("svd: decomposition did not converge for " + shape_string(m));
  }
  SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  if (!all_finite(out.left) || !all_finite(out.right) || !out.singular_values.allFinite()) {
    throw NumericalError("svd: decomposition produced non-finite output");
  }
  return out;
}

RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  Eigen::BDCSVD<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success || !solver.singularValues().allFinite()) {
    throw NumericalError("singular_values: decomposition did not converge for " +
                         shape_string(m));
  }
  return solver.singularValues();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigen");
  require_finite(h, "hermitian_eigen");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigen: eigensolver did not converge for " +
                         shape_string(h));
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shapes " + shape_string(a) + " and " +
                         shape_string(b) + " differ");
  }
  // Tr(A^* B) = sum_ij conj(A_ij) B_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m).sum();
}

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

ComplexMatrix optimal_unitary(const ComplexMatrix& m) {
  require_square(m, "optimal_unitary");
  const SvdResult s = svd(m);
  return s.left * s.right.adjoint();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p) {
  require_square(p, "psd_sqrt");
  if (!is_hermitian(p, kHermitianTol * std::max(1.0, p.norm()))) {
    throw NotPsdError("psd_sqrt: matrix is not Hermitian");
  }
  const HermitianEigen e = hermitian_eigen(p);
  const double min_eval = e.values.size() ? e.values.minCoeff() : 0.0;
  if (min_eval < -kNotPsdTol) {
    std::ostringstream msg;
    msg << "psd_sqrt: eigenvalue " << min_eval << " is below -" << kNotPsdTol;
    throw NotPsdError(msg.str());
  }
  // Rounding-level eigenvalues count as zero.
  const double top = e.values.size() ? e.values.cwiseAbs().maxCoeff() : 0.0;
  const double floor =
      static_cast<double>(p.rows()) * std::numeric_limits<double>::epsilon() * top;
  const RealVector roots =
      e.values.unaryExpr([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
  return e.vectors * roots.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

double fidelity(const ComplexMatrix& p, const ComplexMatrix& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw DimensionError("fidelity: shapes " + shape_string(p) + " and " +
                         shape_string(q) + " differ");
  }
  return trace_norm(psd_sqrt(p) * psd_sqrt(q));
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  const HermitianEigen e = hermitian_eigen(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    const double p = e.values(i);
    if (p > 1e-12) s -= p * std::log2(p);
  }
  return s;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, std::max(tol, kHermitianTol))) return false;
  if (m.size() == 0) return true;
  return hermitian_eigen(m).values.minCoeff() >= -tol;
}

bool is_isometry(const ComplexMatrix& m, double tol) {
  if (m.rows() < m.cols()) return false;
  const ComplexMatrix gram = m.adjoint() * m;
  const ComplexMatrix dev = gram - ComplexMatrix::Identity(m.cols(), m.cols());
  return spectral_norm(dev) <= tol;
}

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::string shape_string(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace ancilla
