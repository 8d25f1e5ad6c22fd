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

#include "ancilla/channels.hpp"

#include <cmath>
#include <sstream>

#include "ancilla/tensor_ops.hpp"

namespace ancilla {

using Index = Eigen::Index;

namespace {

void check_same_shape(const LinearMapRep& a, const LinearMapRep& b, const char* what) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw DimensionError(std::string(what) + ": maps have different dimensions");
  }
}

Index int_pow(Index base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Choi matrix of X -> scale * sum_i E_ii ⊗ inner(R_i(X)) on (C^n)^{⊗k}.
LinearMapRep reduce_then_apply(Index n, int k, const LinearMapRep& inner, double scale) {
  const Index din = int_pow(n, k);
  const Index dout = k * n;
  ComplexMatrix j = ComplexMatrix::Zero(din * dout, din * dout);
  auto digit = [&](Index a, int i) { return (a / int_pow(n, k - 1 - i)) % n; };
  for (Index a = 0; a < din; ++a) {
    for (Index b = 0; b < din; ++b) {
      for (int i = 0; i < k; ++i) {
        bool others_match = true;
        for (int l = 0; l < k && others_match; ++l) {
          if (l != i && digit(a, l) != digit(b, l)) others_match = false;
        }
        if (!others_match) continue;
        j.block(a * dout + i * n, b * dout + i * n, n, n) +=
            scale * inner.choi_block(digit(a, i), digit(b, i));
      }
    }
  }
  return LinearMapRep(din, dout, std::move(j));
}

void check_wh_args(Index n, int alpha) {
  if (n < 2) throw DimensionError("Werner-Holevo channels need n >= 2");
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("alpha must be 0 or 1");
}

}  // namespace

// -----------------------------------------------------------------------------
// LinearMapRep

LinearMapRep::LinearMapRep(Index dim_in, Index dim_out, ComplexMatrix choi)
    : dim_in_(dim_in), dim_out_(dim_out), choi_(std::move(choi)) {
  if (dim_in < 1 || dim_out < 1) {
    throw DimensionError("LinearMapRep: dimensions must be positive");
  }
  if (choi_.rows() != dim_in * dim_out || choi_.cols() != dim_in * dim_out) {
    throw DimensionError("LinearMapRep: Choi matrix " + shape_string(choi_) +
                         " does not match dim_in*dim_out = " +
                         std::to_string(dim_in * dim_out));
  }
  if (!all_finite(choi_)) throw NumericalError("LinearMapRep: non-finite Choi matrix");
}

LinearMapRep LinearMapRep::from_action(
    Index dim_in, Index dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action) {
  ComplexMatrix j(dim_in * dim_out, dim_in * dim_out);
  ComplexMatrix unit = ComplexMatrix::Zero(dim_in, dim_in);
  for (Index a = 0; a < dim_in; ++a) {
    for (Index b = 0; b < dim_in; ++b) {
      unit(a, b) = 1.0;
      const ComplexMatrix image = action(unit);
      unit(a, b) = 0.0;
      if (image.rows() != dim_out || image.cols() != dim_out) {
        throw DimensionError("from_action: action returned " + shape_string(image) +
                             ", expected " + std::to_string(dim_out) + "x" +
                             std::to_string(dim_out));
      }
      j.block(a * dim_out, b * dim_out, dim_out, dim_out) = image;
    }
  }
  return LinearMapRep(dim_in, dim_out, std::move(j));
}

LinearMapRep& LinearMapRep::operator+=(const LinearMapRep& other) {
  check_same_shape(*this, other, "operator+=");
  choi_ += other.choi_;
  return *this;
}

LinearMapRep& LinearMapRep::operator-=(const LinearMapRep& other) {
  check_same_shape(*this, other, "operator-=");
  choi_ -= other.choi_;
  return *this;
}

LinearMapRep& LinearMapRep::operator*=(double s) {
  choi_ *= s;
  return *this;
}

LinearMapRep operator+(LinearMapRep a, const LinearMapRep& b) { return a += b; }
LinearMapRep operator-(LinearMapRep a, const LinearMapRep& b) { return a -= b; }
LinearMapRep operator*(double s, LinearMapRep a) { return a *= s; }

LinearMapRep weighted_difference(double lambda, const LinearMapRep& map0,
                                 const LinearMapRep& map1) {
  check_same_shape(map0, map1, "weighted_difference");
  return LinearMapRep(map0.dim_in(), map0.dim_out(),
                      lambda * map0.choi() - (1.0 - lambda) * map1.choi());
}

// -----------------------------------------------------------------------------
// Action

ComplexMatrix apply(const LinearMapRep& map, const ComplexMatrix& x) {
  if (x.rows() != map.dim_in() || x.cols() != map.dim_in()) {
    throw DimensionError("apply: input " + shape_string(x) + " does not match dim_in " +
                         std::to_string(map.dim_in()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(map.dim_out(), map.dim_out());
  for (Index b = 0; b < x.cols(); ++b) {
    for (Index a = 0; a < x.rows(); ++a) {
      if (x(a, b) != 0.0) out += x(a, b) * map.choi_block(a, b);
    }
  }
  return out;
}

ComplexMatrix apply_extended(const LinearMapRep& map, const ComplexMatrix& x,
                             Index ancilla_dim) {
  const Index din = map.dim_in();
  const Index dout = map.dim_out();
  const Index m = ancilla_dim;
  if (m < 1 || x.rows() != din * m || x.cols() != din * m) {
    throw DimensionError("apply_extended: input " + shape_string(x) +
                         " does not match dim_in*ancilla = " + std::to_string(din * m));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dout * m, dout * m);
  for (Index a = 0; a < din; ++a) {
    for (Index b = 0; b < din; ++b) {
      const auto xb = x.block(a * m, b * m, m, m);
      const auto jb = map.choi_block(a, b);
      for (Index y2 = 0; y2 < dout; ++y2) {
        for (Index y1 = 0; y1 < dout; ++y1) {
          const Complex coeff = jb(y1, y2);
          if (coeff == 0.0) continue;
          out.block(y1 * m, y2 * m, m, m) += coeff * xb;
        }
      }
    }
  }
  return out;
}

ComplexMatrix apply_on_second(const LinearMapRep& map, const ComplexMatrix& x,
                              Index ancilla_dim) {
  const Index din = map.dim_in();
  const Index dout = map.dim_out();
  const Index m = ancilla_dim;
  if (m < 1 || x.rows() != din * m || x.cols() != din * m) {
    throw DimensionError("apply_on_second: input " + shape_string(x) +
                         " does not match ancilla*dim_in = " + std::to_string(din * m));
  }
  ComplexMatrix out(dout * m, dout * m);
  for (Index c = 0; c < m; ++c) {
    for (Index c2 = 0; c2 < m; ++c2) {
      out.block(c * dout, c2 * dout, dout, dout) =
          ancilla::apply(map, ComplexMatrix(x.block(c * din, c2 * din, din, din)));
    }
  }
  return out;
}

LinearMapRep adjoint_map(const LinearMapRep& map) {
  const Index din = map.dim_in();
  const Index dout = map.dim_out();
  // J(Phi^*)[(y,a),(y',b)] = conj J(Phi)[(a,y),(b,y')]
  ComplexMatrix j =
      permute_systems(map.choi(), SystemLayout{din, dout}, {2, 1}).conjugate();
  return LinearMapRep(dout, din, std::move(j));
}

LinearMapRep compose(const LinearMapRep& f, const LinearMapRep& g) {
  if (g.dim_out() != f.dim_in()) {
    throw DimensionError("compose: inner map outputs dimension " +
                         std::to_string(g.dim_out()) + ", outer map expects " +
                         std::to_string(f.dim_in()));
  }
  return LinearMapRep(g.dim_in(), f.dim_out(), apply_on_second(f, g.choi(), g.dim_in()));
}

// -----------------------------------------------------------------------------
// Channel properties

std::vector<std::string> channel_defects(const LinearMapRep& map, double tol) {
  std::vector<std::string> defects;
  const ComplexMatrix& j = map.choi();
  const double asym = (j - j.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    std::ostringstream msg;
    msg << "Choi matrix is not Hermitian (max |J - J^*| = " << asym << ")";
    defects.push_back(msg.str());
  } else {
    const double min_eval = hermitian_eigen((j + j.adjoint()) / 2.0).values.minCoeff();
    if (min_eval < -tol) {
      std::ostringstream msg;
      msg << "not completely positive: Choi matrix has eigenvalue " << min_eval;
      defects.push_back(msg.str());
    }
  }
  const ComplexMatrix reduced = partial_trace(j, SystemLayout{map.dim_in(), map.dim_out()}, {1});
  const double tp_err =
      (reduced - ComplexMatrix::Identity(map.dim_in(), map.dim_in())).cwiseAbs().maxCoeff();
  if (tp_err > tol) {
    std::ostringstream msg;
    msg << "not trace preserving: max |Tr_out J - I| = " << tp_err;
    defects.push_back(msg.str());
  }
  return defects;
}

bool is_channel(const LinearMapRep& map, double tol) { return channel_defects(map, tol).empty(); }

bool is_completely_positive(const LinearMapRep& map, double tol) {
  return is_psd(map.choi(), tol);
}

KrausSet kraus_from_choi(const LinearMapRep& map) {
  if (!is_completely_positive(map)) {
    throw NotChannelError("kraus_from_choi: map is not completely positive");
  }
  const ComplexMatrix& j = map.choi();
  const HermitianEigen e = hermitian_eigen((j + j.adjoint()) / 2.0);
  const Index count = e.values.size();
  const double top = e.values(count - 1);
  KrausSet out;
  if (top <= 0.0) return out;
  for (Index idx = count - 1; idx >= 0; --idx) {
    const double lambda = e.values(idx);
    if (lambda <= 1e-10 * top) break;
    const ComplexVector w = e.vectors.col(idx);
    out.operators.push_back(std::sqrt(lambda) *
                            unvec(w, map.dim_in(), map.dim_out()).transpose());
  }
  return out;
}

ComplexMatrix stinespring_isometry(const LinearMapRep& map) {
  const KrausSet kraus = kraus_from_choi(map);
  const Index r = static_cast<Index>(kraus.operators.size());
  const Index dout = map.dim_out();
  ComplexMatrix a = ComplexMatrix::Zero(dout * r, map.dim_in());
  for (Index i = 0; i < r; ++i) {
    const ComplexMatrix& k = kraus.operators[i];
    for (Index y = 0; y < dout; ++y) a.row(y * r + i) = k.row(y);
  }
  return a;
}

LinearMapRep complementary_channel(const LinearMapRep& map) {
  const ComplexMatrix a = stinespring_isometry(map);
  const Index r = a.rows() / map.dim_out();
  const SystemLayout layout{map.dim_out(), r};
  return LinearMapRep::from_action(map.dim_in(), r, [&](const ComplexMatrix& x) {
    return partial_trace(a * x * a.adjoint(), layout, {2});
  });
}

// -----------------------------------------------------------------------------
// Constructors

LinearMapRep identity_map(Index n) {
  const ComplexVector v = vec(ComplexMatrix::Identity(n, n));
  return LinearMapRep(n, n, v * v.adjoint());
}

LinearMapRep transpose_map(Index n) { return LinearMapRep(n, n, swap_operator(n, n)); }

LinearMapRep trace_identity_map(Index n) {
  return LinearMapRep(n, n, ComplexMatrix::Identity(n * n, n * n));
}

LinearMapRep completely_depolarizing(Index n) {
  return LinearMapRep(n, n, ComplexMatrix::Identity(n * n, n * n) / static_cast<double>(n));
}

LinearMapRep replacement_channel(Index dim_in, const ComplexMatrix& sigma) {
  return LinearMapRep(dim_in, sigma.rows(),
                      kron(ComplexMatrix::Identity(dim_in, dim_in), sigma));
}

LinearMapRep conjugation_map(const ComplexMatrix& v) {
  return LinearMapRep::from_action(v.cols(), v.rows(), [&](const ComplexMatrix& x) {
    return ComplexMatrix(v * x * v.adjoint());
  });
}

LinearMapRep dilated_channel(const ComplexMatrix& u, const ComplexMatrix& sigma) {
  const Index r = sigma.rows();
  if (sigma.cols() != r || r < 1 || u.cols() % r != 0) {
    throw DimensionError("dilated_channel: isometry columns must be a multiple of dim(sigma)");
  }
  const Index n = u.cols() / r;
  return LinearMapRep::from_action(n, u.rows(), [&](const ComplexMatrix& x) {
    return ComplexMatrix(u * kron(x, sigma) * u.adjoint());
  });
}

LinearMapRep channel_from_isometry(const ComplexMatrix& a, Index dim_out, Index env_dim) {
  if (a.rows() != dim_out * env_dim) {
    throw DimensionError("channel_from_isometry: rows must equal dim_out*env_dim");
  }
  const SystemLayout layout{dim_out, env_dim};
  return LinearMapRep::from_action(a.cols(), dim_out, [&](const ComplexMatrix& x) {
    return partial_trace(a * x * a.adjoint(), layout, {1});
  });
}

LinearMapRep random_channel(Rng& rng, Index dim_in, Index dim_out, Index env_dim) {
  return channel_from_isometry(random_isometry(rng, dim_out * env_dim, dim_in), dim_out,
                               env_dim);
}

LinearMapRep reduction_map(const std::vector<Index>& dims, int subsystem) {
  const SystemLayout layout(dims);
  const Index dout = layout.dim(subsystem);
  return LinearMapRep::from_action(layout.total(), dout, [&](const ComplexMatrix& x) {
    return partial_trace(x, layout, {subsystem});
  });
}

LinearMapRep werner_holevo(Index n, int alpha) {
  check_wh_args(n, alpha);
  const ComplexMatrix id = ComplexMatrix::Identity(n * n, n * n);
  const ComplexMatrix w = swap_operator(n, n);
  if (alpha == 0) return LinearMapRep(n, n, (id + w) / static_cast<double>(n + 1));
  return LinearMapRep(n, n, (id - w) / static_cast<double>(n - 1));
}

LinearMapRep gamma_channel(Index n, int k, int alpha) {
  check_wh_args(n, alpha);
  if (k < 1) throw DimensionError("gamma_channel: k must be positive");
  return reduce_then_apply(n, k, werner_holevo(n, alpha), 1.0 / k);
}

LinearMapRep psi_map(Index n, int k) {
  if (n < 2) throw DimensionError("psi_map: n must be at least 2");
  if (k < 1) throw DimensionError("psi_map: k must be positive");
  return reduce_then_apply(n, k, transpose_map(n), 1.0);
}

double werner_holevo_lambda(Index n) {
  return static_cast<double>(n + 1) / (2.0 * static_cast<double>(n));
}

}  // namespace ancilla
