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
#include <sstream>

#include "ancilla/norms_opt.hpp"
#include "ancilla/structure.hpp"

namespace ancilla {

using Index = Eigen::Index;

namespace {

constexpr double kAxiomSlack = 1e-8;
constexpr double kStrictGap = 1e-6;

ComplexMatrix pure(const ComplexVector& u) { return u * u.adjoint(); }

// vec(A^T)/sqrt(n) for a random isometry A: C^n -> C^m.
ComplexVector random_max_entangled(Rng& rng, Index n, Index m) {
  const ComplexMatrix a = random_isometry(rng, m, n);
  return vec(a.transpose()) / std::sqrt(static_cast<double>(n));
}

class ViolationLog {
 public:
  explicit ViolationLog(std::string name) : name_(std::move(name)) {}

  void add(int sample, const char* property, double lhs, const char* op, double rhs) {
    std::ostringstream msg;
    msg.precision(12);
    msg << name_ << " sample " << sample << ": " << property << " violated (" << lhs << ' '
        << op << ' ' << rhs << ")";
    list_.push_back(msg.str());
  }

  std::vector<std::string> take() { return std::move(list_); }

 private:
  std::string name_;
  std::vector<std::string> list_;
};

}  // namespace

WeakMeasure negativity_measure() {
  return {"negativity",
          [](const ComplexMatrix& rho, Index n, Index m) {
            return negativity(rho, SystemLayout{n, m}, 1);
          },
          [](Index n) { return static_cast<double>(n); }};
}

WeakMeasure coherent_information_measure() {
  return {"coherent information",
          [](const ComplexMatrix& rho, Index n, Index m) {
            const ComplexMatrix second = partial_trace(rho, SystemLayout{n, m}, {2});
            return von_neumann_entropy(second) - von_neumann_entropy(rho);
          },
          [](Index n) { return std::log2(static_cast<double>(n)); }};
}

std::vector<std::string> check_weak_measure_axioms(const WeakMeasure& measure, Index n, Index m,
                                                   int samples, std::uint64_t seed) {
  if (n < 1 || n > m) throw DimensionError("check_weak_measure_axioms: requires 1 <= n <= m");
  if (samples < 0) throw std::invalid_argument("check_weak_measure_axioms: negative samples");
  const double g = measure.max_function(n);
  const Index dim = n * m;
  auto eval = [&](const ComplexMatrix& rho) { return measure.evaluate(rho, n, m); };
  ViolationLog log(measure.name);

  for (int s = 0; s < samples; ++s) {
    Rng rng(seed, static_cast<std::uint64_t>(s));

    // Bound by the maximum function, on mixed and pure states.
    const Index rank = 1 + rng.uniform_int(0, dim - 1);
    const double mixed = eval(random_density(rng, dim, rank));
    if (mixed > g + kAxiomSlack) log.add(s, "upper bound (mixed)", mixed, ">", g);
    const ComplexVector psi = random_unit_vector(rng, n * m);
    const double pure_value = eval(pure(psi));
    if (pure_value > g + kAxiomSlack) log.add(s, "upper bound (pure)", pure_value, ">", g);

    // Pure maximizers are exactly the maximally entangled states.
    const double max_value = eval(pure(random_max_entangled(rng, n, m)));
    if (std::abs(max_value - g) > kAxiomSlack) {
      log.add(s, "maximally entangled value", max_value, "!=", g);
    }
    if (!is_max_entangled(psi, n, m) && pure_value > g - kStrictGap) {
      log.add(s, "strict maximum", pure_value, ">=", g - kStrictGap);
    }

    // Monotone under channels on the second subsystem.
    const ComplexMatrix rho = random_density(rng, dim, 1 + rng.uniform_int(0, dim - 1));
    const Index env = 1 + rng.uniform_int(0, m - 1);
    const LinearMapRep channel = random_channel(rng, m, m, env);
    const double before = eval(rho);
    const double after = eval(apply_on_second(channel, rho, n));
    if (after > before + kAxiomSlack) log.add(s, "monotonicity", after, ">", before);

    // Convex on ensembles of pure states.
    const Index terms = 2 + rng.uniform_int(0, 2);
    const RealVector p = random_probabilities(rng, terms);
    ComplexMatrix mixture = ComplexMatrix::Zero(dim, dim);
    double average = 0.0;
    for (Index t = 0; t < terms; ++t) {
      const ComplexMatrix state = pure(random_unit_vector(rng, n * m));
      mixture += p(t) * state;
      average += p(t) * eval(state);
    }
    const double mixed_value = eval(mixture);
    if (mixed_value > average + kAxiomSlack) {
      log.add(s, "pure-state convexity", mixed_value, ">", average);
    }
  }
  return log.take();
}

}  // namespace ancilla
