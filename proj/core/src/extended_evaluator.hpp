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

#ifndef ANCILLA_SRC_EXTENDED_EVALUATOR_HPP_
#define ANCILLA_SRC_EXTENDED_EVALUATOR_HPP_

#include <vector>

#include "ancilla/channels.hpp"

namespace ancilla::internal {

/**
 * Evaluates Phi ⊗ I_m and its adjoint on the rank-one inputs used by the
 * alternating maximization.
 *
 * The Choi matrix is stored as its list of nonzero entries, so the cost of
 * each contraction is nnz(J) * m^2. The output space is split into the
 * connected components of the output indices coupled by J; the extended
 * output is block diagonal along them and each block is decomposed
 * separately.
 *
 * Vectors on C^dim_in ⊗ C^m use the index a*m + c. All methods are const and
 * safe to call concurrently.
 */
class ExtendedEvaluator {
 public:
  ExtendedEvaluator(const LinearMapRep& map, Eigen::Index ancilla_dim);

  [[nodiscard]] Eigen::Index dim_in() const { return dim_in_; }
  [[nodiscard]] Eigen::Index dim_out() const { return dim_out_; }
  [[nodiscard]] Eigen::Index ancilla_dim() const { return m_; }
  [[nodiscard]] bool hermiticity_preserving() const { return hermitian_choi_; }

  /// y = (Phi ⊗ I)(u v^*).
  void forward(const ComplexVector& u, const ComplexVector& v, ComplexMatrix& y) const;

  /// Sets `unitary` to a block-diagonal unitary with <unitary, y> = ||y||_1
  /// and returns ||y||_1. With `hermitian` set, y is treated as Hermitian and
  /// the sign of y is used.
  double polar(const ComplexMatrix& y, ComplexMatrix& unitary, bool hermitian) const;

  /// out = M v with M = (Phi ⊗ I)^*(unitary).
  void adjoint_times(const ComplexMatrix& unitary, const ComplexVector& v,
                     ComplexVector& out) const;

  /// out = M^* u with M = (Phi ⊗ I)^*(unitary).
  void adjoint_conj_times(const ComplexMatrix& unitary, const ComplexVector& u,
                          ComplexVector& out) const;

  /// out = (Phi ⊗ I)^*(unitary) as a full matrix.
  void adjoint_full(const ComplexMatrix& unitary, ComplexMatrix& out) const;

  /// Number of output blocks (for diagnostics and tests).
  [[nodiscard]] std::size_t block_count() const { return blocks_.size(); }

 private:
  struct Entry {
    Eigen::Index a;
    Eigen::Index y;
    Eigen::Index b;
    Eigen::Index y2;
    Complex value;
  };

  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
  Eigen::Index m_;
  bool hermitian_choi_;
  std::vector<Entry> entries_;
  std::vector<std::vector<Eigen::Index>> blocks_;  // extended output indices y*m + c
};

}  // namespace ancilla::internal

#endif  // ANCILLA_SRC_EXTENDED_EVALUATOR_HPP_
