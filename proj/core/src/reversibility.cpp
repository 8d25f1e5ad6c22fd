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

#include <cmath>

#include "ancilla/structure.hpp"

namespace ancilla {

using Index = Eigen::Index;

bool ReversibilityReport::consistent() const {
  return structure.has_value() == verdict && trace_norm_preserving == verdict &&
         fidelity_preserving == verdict && complement_constant == verdict &&
         left_inverse_verified == verdict;
}

LinearMapRep left_inverse_channel(const ComplexMatrix& u, Index n) {
  if (n < 1 || u.cols() % n != 0) {
    throw DimensionError("left_inverse_channel: isometry columns must be a multiple of n");
  }
  const Index m = u.rows();
  const Index r = u.cols() / n;
  const SystemLayout layout{n, r};
  const ComplexMatrix off_range = ComplexMatrix::Identity(m, m) - u * u.adjoint();
  const ComplexMatrix eta = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  return LinearMapRep::from_action(m, n, [&](const ComplexMatrix& y) {
    return ComplexMatrix(partial_trace(u.adjoint() * y * u, layout, {1}) +
                         hs_inner(off_range, y) * eta);
  });
}

ReversibilityReport reversibility_check(const LinearMapRep& map, int samples,
                                        std::uint64_t seed, double tol) {
  const auto defects = channel_defects(map, 1e-6);
  if (!defects.empty()) {
    std::string msg = "reversibility_check: not a channel:";
    for (const auto& d : defects) msg += " " + d + ";";
    throw NotChannelError(msg);
  }
  const Index n = map.dim_in();
  const Index m = map.dim_out();
  ReversibilityReport report;

  const ComplexMatrix& j = map.choi();
  const ComplexMatrix normalized = (j + j.adjoint()) / (2.0 * trace_norm(j));
  report.structure = extract_structure(normalized, n, m, tol);
  report.verdict = report.structure.has_value();

  Rng rng(seed);
  report.trace_norm_preserving = true;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix x = random_ginibre(rng, n, n);
    const double in = trace_norm(x);
    if (std::abs(trace_norm(ancilla::apply(map, x)) - in) > tol * in) {
      report.trace_norm_preserving = false;
    }
  }

  report.fidelity_preserving = true;
  for (int s = 0; s < samples; ++s) {
    const ComplexVector u = random_unit_vector(rng, n);
    const ComplexVector v = random_unit_vector(rng, n);
    const double in = std::abs(u.dot(v));
    const ComplexMatrix rho = u * u.adjoint();
    const ComplexMatrix sigma = v * v.adjoint();
    const double out = fidelity(ancilla::apply(map, rho), ancilla::apply(map, sigma));
    if (std::abs(out - in) > tol) report.fidelity_preserving = false;
  }

  const LinearMapRep comp = complementary_channel(map);
  const ComplexMatrix sigma =
      partial_trace(comp.choi(), SystemLayout{n, comp.dim_out()}, {2}) / static_cast<double>(n);
  const ComplexMatrix constant = kron(ComplexMatrix::Identity(n, n), sigma);
  report.complement_constant = frobenius_norm(comp.choi() - constant) <= tol;

  if (report.structure) {
    report.left_inverse = left_inverse_channel(report.structure->u, n);
    const LinearMapRep round_trip = compose(*report.left_inverse, map);
    report.left_inverse_error = frobenius_norm(round_trip.choi() - identity_map(n).choi());
    report.left_inverse_verified = report.left_inverse_error <= kResidualTol;
  }
  return report;
}

}  // namespace ancilla
