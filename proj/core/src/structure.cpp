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

#include "ancilla/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ancilla/norms_opt.hpp"

namespace ancilla {

using Index = Eigen::Index;

namespace {

struct Factorization {
  std::vector<double> weights;
  std::vector<ComplexVector> left;
  std::vector<ComplexVector> right;
};

// X = sum_i w_i left_i right_i^*, with w_i above 1e-10 times the largest.
Factorization rank_one_terms(const ComplexMatrix& x) {
  Factorization f;
  if (is_hermitian(x) && is_psd(x)) {
    const HermitianEigen e = hermitian_eigen((x + x.adjoint()) / 2.0);
    const Index count = e.values.size();
    const double top = e.values(count - 1);
    for (Index i = count - 1; i >= 0 && top > 0.0; --i) {
      if (e.values(i) <= 1e-10 * top) break;
      f.weights.push_back(e.values(i));
      f.left.emplace_back(e.vectors.col(i));
      f.right.emplace_back(e.vectors.col(i));
    }
    return f;
  }
  const SvdResult s = svd(x);
  const Index rank = s.rank();
  for (Index i = 0; i < rank; ++i) {
    f.weights.push_back(s.singular_values(i));
    f.left.emplace_back(s.left.col(i));
    f.right.emplace_back(s.right.col(i));
  }
  return f;
}

// A_i = sqrt(n) unvec(w, n, m)^T, so that w = vec(A_i^T) / sqrt(n).
ComplexMatrix isometry_of(const ComplexVector& w, Index n, Index m) {
  return std::sqrt(static_cast<double>(n)) * unvec(w, n, m).transpose();
}

// U = sum_i A_i ⊗ e_i^*, columns indexed x*r + i.
ComplexMatrix assemble(const std::vector<ComplexMatrix>& parts, Index n, Index m) {
  const Index r = static_cast<Index>(parts.size());
  ComplexMatrix u(m, n * r);
  for (Index i = 0; i < r; ++i) {
    for (Index x = 0; x < n; ++x) u.col(x * r + i) = parts[i].col(x);
  }
  return u;
}

bool pairwise_orthogonal_ranges(const std::vector<ComplexMatrix>& parts, double tol) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if ((parts[i].adjoint() * parts[j]).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

double max_abs(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace

bool is_max_entangled(const ComplexVector& u, Index n, Index m, double tol) {
  if (u.size() != n * m) {
    throw DimensionError("is_max_entangled: vector length " + std::to_string(u.size()) +
                         " is not " + std::to_string(n) + "*" + std::to_string(m));
  }
  if (std::abs(u.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("is_max_entangled: vector is not a unit vector");
  }
  const RealVector s = singular_values(unvec(u, n, m));
  const Index k = std::min(n, m);
  const double target = 1.0 / std::sqrt(static_cast<double>(k));
  for (Index i = 0; i < k; ++i) {
    if (std::abs(s(i) - target) > tol) return false;
  }
  return true;
}

ComplexMatrix reconstruct(const StructureDecomposition& d, Index n) {
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix left = kron(id, d.u);
  const ComplexMatrix right = kron(id, d.v);
  return left * kron(max_entangled_state(n), d.sigma) * right.adjoint();
}

std::optional<StructureDecomposition> extract_structure(const ComplexMatrix& x, Index n, Index m,
                                                        double tol) {
  const SystemLayout layout{n, m};
  layout.check_square(x, "extract_structure");
  const double norm = trace_norm(x);
  if (std::abs(norm - 1.0) > 1e-8) {
    throw std::invalid_argument("extract_structure: trace norm is " + std::to_string(norm) +
                                ", expected 1");
  }
  if (n > m) return std::nullopt;
  if (negativity(x, layout, 1) < static_cast<double>(n) - tol) return std::nullopt;

  const Factorization f = rank_one_terms(x);
  const Index r = static_cast<Index>(f.weights.size());
  if (r < 1 || r > m / n) return std::nullopt;

  std::vector<ComplexMatrix> a_parts;
  std::vector<ComplexMatrix> b_parts;
  for (Index i = 0; i < r; ++i) {
    if (!is_max_entangled(f.left[i], n, m, tol) || !is_max_entangled(f.right[i], n, m, tol)) {
      return std::nullopt;
    }
    a_parts.push_back(isometry_of(f.left[i], n, m));
    b_parts.push_back(isometry_of(f.right[i], n, m));
  }
  if (!pairwise_orthogonal_ranges(a_parts, tol) || !pairwise_orthogonal_ranges(b_parts, tol)) {
    return std::nullopt;
  }

  StructureDecomposition d;
  d.r = static_cast<int>(r);
  d.sigma = ComplexMatrix::Zero(r, r);
  for (Index i = 0; i < r; ++i) d.sigma(i, i) = f.weights[i];
  d.u = assemble(a_parts, n, m);
  d.v = assemble(b_parts, n, m);
  if (!is_isometry(d.u, 1e-8) || !is_isometry(d.v, 1e-8)) return std::nullopt;
  d.residual = frobenius_norm(reconstruct(d, n) - x);
  if (d.residual > kResidualTol) return std::nullopt;
  return d;
}

MultipartiteStructure extract_structure_multipartite(const ComplexMatrix& x,
                                                    const SystemLayout& dims, Index m,
                                                    double tol) {
  std::vector<Index> full = dims.dims();
  full.push_back(m);
  const SystemLayout layout(full);
  layout.check_square(x, "extract_structure_multipartite");

  MultipartiteStructure out;
  out.decomposition = extract_structure(x, dims.total(), m, tol);
  out.global_check = out.decomposition.has_value();
  out.per_subsystem_check = true;
  const int y_index = layout.size();
  for (int i = 1; i <= dims.size(); ++i) {
    const ComplexMatrix reduced = partial_trace(x, layout, {i, y_index});
    const double neg = negativity(reduced, SystemLayout{dims.dim(i), m}, 1);
    out.subsystem_negativities.push_back(neg);
    if (neg < static_cast<double>(dims.dim(i)) - tol) out.per_subsystem_check = false;
  }
  return out;
}

double psi_value(const ComplexMatrix& x, Index n, int k, Index m) {
  if (n < 1 || k < 1 || m < 1) throw DimensionError("psi_value: dimensions must be positive");
  std::vector<Index> dims(static_cast<std::size_t>(k), n);
  dims.push_back(m);
  const SystemLayout layout(dims);
  layout.check_square(x, "psi_value");
  double total = 0.0;
  for (int i = 1; i <= k; ++i) {
    const ComplexMatrix reduced = partial_trace(x, layout, {i, k + 1});
    total += negativity(reduced, SystemLayout{n, m}, 1);
  }
  return total;
}

bool triangle_equality_consequence(const std::vector<ComplexMatrix>& operators, double tol) {
  if (operators.empty()) return true;
  const Index rows = operators.front().rows();
  const Index cols = operators.front().cols();
  for (const auto& a : operators) {
    if (a.rows() != rows || a.cols() != cols) {
      throw DimensionError("triangle_equality_consequence: operators differ in shape");
    }
  }
  for (std::size_t i = 0; i < operators.size(); ++i) {
    for (std::size_t j = i + 1; j < operators.size(); ++j) {
      if (std::abs(hs_inner(operators[i], operators[j])) > tol) {
        throw std::invalid_argument("triangle_equality_consequence: operators " +
                                    std::to_string(i) + " and " + std::to_string(j) +
                                    " are not orthogonal");
      }
    }
  }

  ComplexMatrix sum = ComplexMatrix::Zero(rows, cols);
  double norm_sum = 0.0;
  for (const auto& a : operators) {
    sum += a;
    norm_sum += trace_norm(a);
  }
  const bool equality = std::abs(trace_norm(sum) - norm_sum) <= tol;

  bool products_vanish = true;
  for (std::size_t i = 0; i < operators.size() && products_vanish; ++i) {
    for (std::size_t j = 0; j < operators.size(); ++j) {
      if (i == j) continue;
      if (max_abs(operators[i] * operators[j].adjoint()) > tol ||
          max_abs(operators[i].adjoint() * operators[j]) > tol) {
        products_vanish = false;
        break;
      }
    }
  }
  if (equality != products_vanish) {
    throw std::logic_error(
        "triangle_equality_consequence: norm equality and vanishing products disagree");
  }
  return equality;
}

int independent_strategy_value(int n, int m) {
  if (n < 1 || m < n || m >= n * n) {
    throw std::out_of_range("independent_strategy_value: requires n <= m < n^2");
  }
  return n + m / n;
}

int independent_strategy_brute_force(int n, int m) {
  int best = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a * b <= m) best = std::max(best, a + b);
    }
  }
  return best;
}

bool fidelity_partialtrace_identity_check(const ComplexVector& u, const ComplexVector& v,
                                          const SystemLayout& layout, double tol) {
  if (layout.size() != 2) {
    throw DimensionError("fidelity_partialtrace_identity_check: layout must be bipartite");
  }
  if (u.size() != layout.total() || v.size() != layout.total()) {
    throw DimensionError("fidelity_partialtrace_identity_check: vector length mismatch");
  }
  const ComplexMatrix pu = partial_trace(u * u.adjoint(), layout, {1});
  const ComplexMatrix pv = partial_trace(v * v.adjoint(), layout, {1});
  const double lhs = fidelity(pu, pv);
  const double rhs = trace_norm(partial_trace(u * v.adjoint(), layout, {2}));
  return std::abs(lhs - rhs) <= tol;
}

}  // namespace ancilla
