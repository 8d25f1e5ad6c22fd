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

#ifndef ANCILLA_TENSOR_OPS_HPP_
#define ANCILLA_TENSOR_OPS_HPP_

#include <initializer_list>
#include <vector>

#include "ancilla/matrix_core.hpp"

namespace ancilla {

/**
 * Ordered subsystem dimensions giving tensor structure to a square matrix.
 *
 * Subsystems are numbered from 1, so `dim(1)` is the leftmost factor. The
 * first factor is the most significant digit of a basis index: for layout
 * (d1, d2) the basis vector e_i ⊗ e_j sits at position i*d2 + j.
 *
 * A layout is never stored inside a matrix. The same operator is routinely
 * viewed under several factorizations, so every operation takes one
 * explicitly.
 */
class SystemLayout {
 public:
  SystemLayout(std::initializer_list<Eigen::Index> dims);
  explicit SystemLayout(std::vector<Eigen::Index> dims);

  [[nodiscard]] int size() const { return static_cast<int>(dims_.size()); }
  [[nodiscard]] Eigen::Index dim(int subsystem) const;
  [[nodiscard]] Eigen::Index total() const { return total_; }
  [[nodiscard]] const std::vector<Eigen::Index>& dims() const { return dims_; }

  /// Throws DimensionError unless `x` is square with side total().
  void check_square(const ComplexMatrix& x, const char* what) const;

  bool operator==(const SystemLayout&) const = default;

 private:
  std::vector<Eigen::Index> dims_;
  Eigen::Index total_ = 1;
};

/// Row-major vectorization: vec(E_ij) = e_i ⊗ e_j.
[[nodiscard]] ComplexVector vec(const ComplexMatrix& a);

/// Inverse of vec. Throws DimensionError when v.size() != rows*cols.
[[nodiscard]] ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows,
                                  Eigen::Index cols);

/// Partial trace keeping the listed subsystems (1-based, any order; the
/// result is ordered as in the layout).
[[nodiscard]] ComplexMatrix partial_trace(const ComplexMatrix& x, const SystemLayout& layout,
                                          const std::vector<int>& keep);

/// Transpose on one subsystem (1-based).
[[nodiscard]] ComplexMatrix partial_transpose(const ComplexMatrix& x,
                                              const SystemLayout& layout, int subsystem);

/// Transpose on several subsystems at once.
[[nodiscard]] ComplexMatrix partial_transpose(const ComplexMatrix& x,
                                              const SystemLayout& layout,
                                              const std::vector<int>& subsystems);

/**
 * Reorders tensor factors: the j-th factor of the result is factor perm[j]
 * of the input (1-based). Equivalent to P X P^* with P the permutation
 * isometry from permutation_operator().
 */
[[nodiscard]] ComplexMatrix permute_systems(const ComplexMatrix& x, const SystemLayout& layout,
                                            const std::vector<int>& perm);

/// Unitary P with P (z_1 ⊗ ... ⊗ z_k) = z_perm[1] ⊗ ... ⊗ z_perm[k].
[[nodiscard]] ComplexMatrix permutation_operator(const SystemLayout& layout,
                                                 const std::vector<int>& perm);

/// Layout of the permuted system.
[[nodiscard]] SystemLayout permuted_layout(const SystemLayout& layout,
                                           const std::vector<int>& perm);

/// tau_n = vec(I_n) vec(I_n)^* / n on C^n ⊗ C^n.
[[nodiscard]] ComplexMatrix max_entangled_state(Eigen::Index n);

/// W in U(C^n ⊗ C^m, C^m ⊗ C^n) with W (x ⊗ y) = y ⊗ x.
[[nodiscard]] ComplexMatrix swap_operator(Eigen::Index n, Eigen::Index m);

}  // namespace ancilla

#endif  // ANCILLA_TENSOR_OPS_HPP_
