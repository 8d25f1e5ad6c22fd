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

#include "ancilla/norms_opt.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "extended_evaluator.hpp"

namespace ancilla {

using Index = Eigen::Index;

namespace {

void validate(const OptConfig& cfg, Index ancilla_dim) {
  if (ancilla_dim < 1) throw DimensionError("ancilla dimension must be positive");
  if (cfg.num_starts < 1) throw std::invalid_argument("num_starts must be at least 1");
  if (!(cfg.stop_tol > 0.0)) throw std::invalid_argument("stop_tol must be positive");
  if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
}

struct BestTracker {
  double value = -1.0;
  ComplexVector u;
  ComplexVector v;

  void offer(double val, const ComplexVector& new_u, const ComplexVector& new_v) {
    if (val > value) {
      value = val;
      u = new_u;
      v = new_v;
    }
  }
};

OptResult run_general(const internal::ExtendedEvaluator& ev, const OptConfig& cfg, int start) {
  OptResult res;
  res.start_index = start;
  res.seed_used = derive_seed(cfg.seed, static_cast<std::uint64_t>(start));
  Rng rng(res.seed_used);
  const Index dim = ev.dim_in() * ev.ancilla_dim();
  ComplexVector u = random_unit_vector(rng, dim);
  ComplexVector v = random_unit_vector(rng, dim);

  ComplexMatrix y;
  ComplexMatrix unitary;
  ComplexVector mv;
  ComplexVector mu;
  ev.forward(u, v, y);
  double value = ev.polar(y, unitary, false);
  BestTracker best;
  best.offer(value, u, v);

  for (int it = 1; it <= cfg.max_iters; ++it) {
    res.iterations = it;
    ev.adjoint_times(unitary, v, mv);
    const double nu = mv.norm();
    if (nu == 0.0) {
      res.converged = true;
      break;
    }
    u = mv / nu;
    ev.adjoint_conj_times(unitary, u, mu);
    const double nv = mu.norm();
    if (nv == 0.0) {
      res.converged = true;
      break;
    }
    v = mu / nv;
    ev.forward(u, v, y);
    const double next = ev.polar(y, unitary, false);
    res.max_decrease = std::max(res.max_decrease, value - next);
    best.offer(next, u, v);
    const bool small_step = next - value < cfg.stop_tol;
    value = next;
    if (small_step) {
      res.converged = true;
      break;
    }
  }
  res.value = best.value;
  res.witness_u = std::move(best.u);
  res.witness_v = std::move(best.v);
  return res;
}

OptResult run_hermitian(const internal::ExtendedEvaluator& ev, const OptConfig& cfg,
                        int start) {
  OptResult res;
  res.start_index = start;
  res.seed_used = derive_seed(cfg.seed, static_cast<std::uint64_t>(start));
  Rng rng(res.seed_used);
  const bool herm = ev.hermiticity_preserving();
  const Index dim = ev.dim_in() * ev.ancilla_dim();
  ComplexVector u = random_unit_vector(rng, dim);

  ComplexMatrix y;
  ComplexMatrix unitary;
  ComplexMatrix m;
  ev.forward(u, u, y);
  double value = ev.polar(y, unitary, herm);
  BestTracker best;
  best.offer(value, u, u);

  for (int it = 1; it <= cfg.max_iters; ++it) {
    res.iterations = it;
    ev.adjoint_full(unitary, m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) / 2.0);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian update: eigensolver failed");
    u = es.eigenvectors().col(dim - 1);
    ev.forward(u, u, y);
    const double next = ev.polar(y, unitary, herm);
    res.max_decrease = std::max(res.max_decrease, value - next);
    best.offer(next, u, u);
    const bool small_step = next - value < cfg.stop_tol;
    value = next;
    if (small_step) {
      res.converged = true;
      break;
    }
  }
  res.value = best.value;
  res.witness_u = best.u;
  res.witness_v = std::move(best.u);
  return res;
}

}  // namespace

double negativity(const ComplexMatrix& x, const SystemLayout& layout, int transposed_subsystem) {
  return trace_norm(partial_transpose(x, layout, transposed_subsystem));
}

int default_thread_count() {
  if (const char* env = std::getenv("ANCILLA_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && n > 0) return static_cast<int>(std::min(n, 1024L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<OptResult> optimize_all_starts(const LinearMapRep& map, Index ancilla_dim,
                                           const OptConfig& cfg, InputMode mode) {
  validate(cfg, ancilla_dim);
  const internal::ExtendedEvaluator ev(map, ancilla_dim);
  std::vector<OptResult> results(cfg.num_starts);
  const int threads =
      std::clamp(cfg.threads > 0 ? cfg.threads : default_thread_count(), 1, cfg.num_starts);

  auto worker = [&](int first, std::exception_ptr& error) {
    try {
      for (int s = first; s < cfg.num_starts; s += threads) {
        results[s] = mode == InputMode::kGeneral ? run_general(ev, cfg, s)
                                                 : run_hermitian(ev, cfg, s);
      }
    } catch (...) {
      error = std::current_exception();
    }
  };

  std::vector<std::exception_ptr> errors(threads);
  if (threads == 1) {
    worker(0, errors[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, std::ref(errors[t]));
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

OptResult best_result(const std::vector<OptResult>& results) {
  if (results.empty()) throw std::invalid_argument("best_result: no results");
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  return results[best];
}

OptResult induced_trace_norm_lb(const LinearMapRep& map, Index ancilla_dim,
                                const OptConfig& cfg) {
  return best_result(optimize_all_starts(map, ancilla_dim, cfg, InputMode::kGeneral));
}

OptResult induced_trace_norm_hermitian_lb(const LinearMapRep& map, Index ancilla_dim,
                                          const OptConfig& cfg) {
  return best_result(optimize_all_starts(map, ancilla_dim, cfg, InputMode::kHermitian));
}

OptResult diamond_norm_lb(const LinearMapRep& map, const OptConfig& cfg) {
  return induced_trace_norm_lb(map, map.dim_in(), cfg);
}

double discrimination_value(const LinearMapRep& map0, const LinearMapRep& map1, double lambda,
                            Index ancilla_dim, const OptConfig& cfg) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
  const LinearMapRep diff = weighted_difference(lambda, map0, map1);
  return 0.5 + 0.5 * induced_trace_norm_lb(diff, ancilla_dim, cfg).value;
}

double rank_one_objective(const LinearMapRep& map, Index ancilla_dim, const ComplexVector& u,
                          const ComplexVector& v) {
  const ComplexMatrix x = u * v.adjoint();
  return trace_norm(apply_extended(map, x, ancilla_dim));
}

ComplexVector embed_witness(const ComplexVector& u, Index dim_in, Index m, Index new_m) {
  if (u.size() != dim_in * m || new_m < m) {
    throw DimensionError("embed_witness: incompatible dimensions");
  }
  ComplexVector out = ComplexVector::Zero(dim_in * new_m);
  for (Index a = 0; a < dim_in; ++a) out.segment(a * new_m, m) = u.segment(a * m, m);
  return out;
}

}  // namespace ancilla
