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

#include "extended_evaluator.hpp"

#include <numeric>

namespace ancilla::internal {

using Index = Eigen::Index;

namespace {

Index find_root(std::vector<Index>& parent, Index i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

ExtendedEvaluator::ExtendedEvaluator(const LinearMapRep& map, Index ancilla_dim)
    : dim_in_(map.dim_in()), dim_out_(map.dim_out()), m_(ancilla_dim) {
  if (ancilla_dim < 1) throw DimensionError("ancilla dimension must be positive");
  const ComplexMatrix& j = map.choi();
  hermitian_choi_ = (j - j.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;

  std::vector<Index> parent(dim_out_);
  std::iota(parent.begin(), parent.end(), 0);
  for (Index b = 0; b < dim_in_; ++b) {
    for (Index y2 = 0; y2 < dim_out_; ++y2) {
      for (Index a = 0; a < dim_in_; ++a) {
        for (Index y = 0; y < dim_out_; ++y) {
          const Complex value = j(a * dim_out_ + y, b * dim_out_ + y2);
          if (value == 0.0) continue;
          entries_.push_back({a, y, b, y2, value});
          parent[find_root(parent, y)] = find_root(parent, y2);
        }
      }
    }
  }

  std::vector<Index> block_of(dim_out_, -1);
  for (Index y = 0; y < dim_out_; ++y) {
    const Index root = find_root(parent, y);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<Index>(blocks_.size());
      blocks_.emplace_back();
    }
    auto& block = blocks_[block_of[root]];
    for (Index c = 0; c < m_; ++c) block.push_back(y * m_ + c);
  }
}

void ExtendedEvaluator::forward(const ComplexVector& u, const ComplexVector& v,
                                ComplexMatrix& y) const {
  const Eigen::Map<const ComplexMatrix> uc(u.data(), m_, dim_in_);
  const Eigen::Map<const ComplexMatrix> vc(v.data(), m_, dim_in_);
  y.setZero(dim_out_ * m_, dim_out_ * m_);
  for (const Entry& e : entries_) {
    y.block(e.y * m_, e.y2 * m_, m_, m_).noalias() +=
        e.value * uc.col(e.a) * vc.col(e.b).adjoint();
  }
}

double ExtendedEvaluator::polar(const ComplexMatrix& y, ComplexMatrix& unitary,
                                bool hermitian) const {
  unitary.setZero(y.rows(), y.cols());
  double total = 0.0;
  for (const auto& idx : blocks_) {
    const ComplexMatrix sub = y(idx, idx);
    if (hermitian) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((sub + sub.adjoint()) / 2.0);
      if (es.info() != Eigen::Success) throw NumericalError("polar: eigensolver failed");
      const RealVector& vals = es.eigenvalues();
      const ComplexMatrix& vecs = es.eigenvectors();
      RealVector sign(vals.size());
      for (Index i = 0; i < vals.size(); ++i) {
        sign(i) = vals(i) < 0.0 ? -1.0 : 1.0;
        total += std::abs(vals(i));
      }
      unitary(idx, idx) = vecs * sign.asDiagonal() * vecs.adjoint();
    } else {
      Eigen::BDCSVD<ComplexMatrix> sv(sub, Eigen::ComputeThinU | Eigen::ComputeThinV);
      if (sv.info() != Eigen::Success) throw NumericalError("polar: SVD failed");
      total += sv.singularValues().sum();
      unitary(idx, idx) = sv.matrixU() * sv.matrixV().adjoint();
    }
  }
  if (!std::isfinite(total)) throw NumericalError("polar: non-finite trace norm");
  return total;
}

void ExtendedEvaluator::adjoint_times(const ComplexMatrix& unitary, const ComplexVector& v,
                                      ComplexVector& out) const {
  out.setZero(dim_in_ * m_);
  const Eigen::Map<const ComplexMatrix> vc(v.data(), m_, dim_in_);
  Eigen::Map<ComplexMatrix> oc(out.data(), m_, dim_in_);
  for (const Entry& e : entries_) {
    oc.col(e.a).noalias() +=
        std::conj(e.value) * unitary.block(e.y * m_, e.y2 * m_, m_, m_) * vc.col(e.b);
  }
}

void ExtendedEvaluator::adjoint_conj_times(const ComplexMatrix& unitary,
                                           const ComplexVector& u, ComplexVector& out) const {
  out.setZero(dim_in_ * m_);
  const Eigen::Map<const ComplexMatrix> uc(u.data(), m_, dim_in_);
  Eigen::Map<ComplexMatrix> oc(out.data(), m_, dim_in_);
  for (const Entry& e : entries_) {
    oc.col(e.b).noalias() +=
        e.value * unitary.block(e.y * m_, e.y2 * m_, m_, m_).adjoint() * uc.col(e.a);
  }
}

void ExtendedEvaluator::adjoint_full(const ComplexMatrix& unitary, ComplexMatrix& out) const {
  out.setZero(dim_in_ * m_, dim_in_ * m_);
  for (const Entry& e : entries_) {
    out.block(e.a * m_, e.b * m_, m_, m_) +=
        std::conj(e.value) * unitary.block(e.y * m_, e.y2 * m_, m_, m_);
  }
}

}  // namespace ancilla::internal
