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

#include "ancilla/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ancilla {

namespace {

using Index = Eigen::Index;

// Strides for the row-major (first factor most significant) convention.
std::vector<Index> strides_of(const std::vector<Index>& dims) {
  std::vector<Index> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) {
    s[i] = s[i + 1] * dims[i + 1];
  }
  return s;
}

// All offsets sum_j digit_j * stride_j over the listed (0-based) subsystems,
// enumerated with the first listed subsystem most significant.
std::vector<Index> offsets_over(const std::vector<Index>& dims,
                                const std::vector<Index>& strides,
                                const std::vector<int>& which) {
  std::vector<Index> out{0};
  for (int w : which) {
    std::vector<Index> next;
    next.reserve(out.size() * dims[w]);
    for (Index base : out) {
      for (Index d = 0; d < dims[w]; ++d) next.push_back(base + d * strides[w]);
    }
    out = std::move(next);
  }
  return out;
}

// Validates a 1-based subsystem list and converts to sorted 0-based indices.
std::vector<int> zero_based(const SystemLayout& layout, const std::vector<int>& subsystems,
                            const char* what) {
  std::vector<int> out;
  out.reserve(subsystems.size());
  for (int s : subsystems) {
    if (s < 1 || s > layout.size()) {
      throw DimensionError(std::string(what) + ": subsystem index " + std::to_string(s) +
                           " outside 1.." + std::to_string(layout.size()));
    }
    out.push_back(s - 1);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw DimensionError(std::string(what) + ": repeated subsystem index");
  }
  return out;
}

std::vector<int> complement_of(int count, const std::vector<int>& chosen) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) {
    if (!std::binary_search(chosen.begin(), chosen.end(), i)) out.push_back(i);
  }
  return out;
}

// 0-based validated permutation.
std::vector<int> checked_perm(const SystemLayout& layout, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != layout.size()) {
    throw DimensionError("permutation has " + std::to_string(perm.size()) +
                         " entries, layout has " + std::to_string(layout.size()));
  }
  std::vector<int> p(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    const int v = perm[j] - 1;
    if (v < 0 || v >= layout.size() || seen[v]) {
      throw DimensionError("invalid permutation of subsystems");
    }
    seen[v] = true;
    p[j] = v;
  }
  return p;
}

// For each old basis index, its position after permuting factors.
std::vector<Index> permuted_positions(const SystemLayout& layout, const std::vector<int>& p) {
  const auto& dims = layout.dims();
  std::vector<Index> new_dims(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) new_dims[j] = dims[p[j]];
  const std::vector<Index> new_strides = strides_of(new_dims);
  std::vector<Index> stride_of_old(dims.size());
  for (std::size_t j = 0; j < p.size(); ++j) stride_of_old[p[j]] = new_strides[j];

  std::vector<int> all(dims.size());
  std::iota(all.begin(), all.end(), 0);
  return offsets_over(dims, stride_of_old, all);
}

}  // namespace

SystemLayout::SystemLayout(std::initializer_list<Index> dims)
    : SystemLayout(std::vector<Index>(dims)) {}

SystemLayout::SystemLayout(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionError("SystemLayout: no subsystems");
  for (Index d : dims_) {
    if (d < 1) throw DimensionError("SystemLayout: dimensions must be positive");
    total_ *= d;
  }
}

Index SystemLayout::dim(int subsystem) const {
  if (subsystem < 1 || subsystem > size()) {
    throw DimensionError("SystemLayout: subsystem index " + std::to_string(subsystem) +
                         " outside 1.." + std::to_string(size()));
  }
  return dims_[subsystem - 1];
}

void SystemLayout::check_square(const ComplexMatrix& x, const char* what) const {
  if (x.rows() != total_ || x.cols() != total_) {
    throw DimensionError(std::string(what) + ": matrix " + shape_string(x) +
                         " does not match layout of total dimension " +
                         std::to_string(total_));
  }
}

ComplexVector vec(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols) {
  if (rows < 0 || cols < 0 || v.size() != rows * cols) {
    throw DimensionError("unvec: vector of length " + std::to_string(v.size()) +
                         " cannot be reshaped to " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  ComplexMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  }
  return a;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, const SystemLayout& layout,
                            const std::vector<int>& keep) {
  layout.check_square(x, "partial_trace");
  if (keep.empty()) throw DimensionError("partial_trace: nothing to keep");
  const std::vector<int> kept = zero_based(layout, keep, "partial_trace");
  const std::vector<int> traced = complement_of(layout.size(), kept);
  const auto strides = strides_of(layout.dims());
  const auto off_keep = offsets_over(layout.dims(), strides, kept);
  const auto off_trace = offsets_over(layout.dims(), strides, traced);

  const Index n = static_cast<Index>(off_keep.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < n; ++r) {
      Complex acc = 0.0;
      for (Index t : off_trace) acc += x(off_keep[r] + t, off_keep[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& x, const SystemLayout& layout,
                                int subsystem) {
  return partial_transpose(x, layout, std::vector<int>{subsystem});
}

ComplexMatrix partial_transpose(const ComplexMatrix& x, const SystemLayout& layout,
                                const std::vector<int>& subsystems) {
  layout.check_square(x, "partial_transpose");
  const std::vector<int> tr = zero_based(layout, subsystems, "partial_transpose");
  const std::vector<int> rest = complement_of(layout.size(), tr);
  const auto strides = strides_of(layout.dims());
  const auto off_t = offsets_over(layout.dims(), strides, tr);
  const auto off_r = offsets_over(layout.dims(), strides, rest);

  ComplexMatrix out(x.rows(), x.cols());
  for (Index b : off_r) {
    for (Index d : off_t) {
      for (Index a : off_r) {
        for (Index c : off_t) {
          out(a + d, b + c) = x(a + c, b + d);
        }
      }
    }
  }
  return out;
}

SystemLayout permuted_layout(const SystemLayout& layout, const std::vector<int>& perm) {
  const std::vector<int> p = checked_perm(layout, perm);
  std::vector<Index> dims(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) dims[j] = layout.dims()[p[j]];
  return SystemLayout(std::move(dims));
}

ComplexMatrix permute_systems(const ComplexMatrix& x, const SystemLayout& layout,
                              const std::vector<int>& perm) {
  layout.check_square(x, "permute_systems");
  const auto pos = permuted_positions(layout, checked_perm(layout, perm));
  ComplexMatrix out(x.rows(), x.cols());
  for (Index c = 0; c < x.cols(); ++c) {
    for (Index r = 0; r < x.rows(); ++r) out(pos[r], pos[c]) = x(r, c);
  }
  return out;
}

ComplexMatrix permutation_operator(const SystemLayout& layout, const std::vector<int>& perm) {
  const auto pos = permuted_positions(layout, checked_perm(layout, perm));
  ComplexMatrix p = ComplexMatrix::Zero(layout.total(), layout.total());
  for (Index i = 0; i < layout.total(); ++i) p(pos[i], i) = 1.0;
  return p;
}

ComplexMatrix max_entangled_state(Index n) {
  if (n < 1) throw DimensionError("max_entangled_state: n must be positive");
  const ComplexVector v = vec(ComplexMatrix::Identity(n, n));
  return v * v.adjoint() / static_cast<double>(n);
}

ComplexMatrix swap_operator(Index n, Index m) {
  if (n < 1 || m < 1) throw DimensionError("swap_operator: dimensions must be positive");
  ComplexMatrix w = ComplexMatrix::Zero(n * m, n * m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) w(j * n + i, i * m + j) = 1.0;
  }
  return w;
}

}  // namespace ancilla
