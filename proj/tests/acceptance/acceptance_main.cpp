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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ancilla/channels.hpp"
#include "ancilla/norms_opt.hpp"
#include "ancilla/structure.hpp"
#include "cli/cli.hpp"
#include "support/test_support.hpp"

namespace ancilla {
namespace {

using Index = Eigen::Index;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Published lower bounds on ||Psi_{n,2} ⊗ I_m||_1, general and Hermitian inputs.
struct Reference {
  int n;
  int m;
  double value;
  double value_hermitian;
};

constexpr Reference kReference[] = {
    {2, 2, 3.0448, 3.0448}, {2, 3, 3.4142, 3.4142}, {2, 4, 4.0000, 4.0000},
    {3, 3, 4.0656, 4.0656}, {3, 4, 4.3307, 4.3307}, {3, 5, 4.6386, 4.6386},
    {3, 6, 5.0551, 5.0551}, {3, 7, 5.2361, 5.2361}, {3, 8, 5.5615, 5.5616},
    {3, 9, 6.0000, 6.0000},
};

struct CliOutput {
  int code;
  std::string out;
  std::string err;
};

CliOutput run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

struct TableValues {
  double value;
  double value_hermitian;
};

// (n, m) -> values from `ancilla table1` with 1000 starts and tol 1e-5.
std::map<std::pair<int, int>, TableValues> g_table;
std::string g_table_error;

void compute_table() {
  for (int n : {2, 3}) {
    const auto t0 = std::chrono::steady_clock::now();
    const CliOutput o = run_cli({"table1", "--n", std::to_string(n), "--starts", "1000", "--tol",
                                 "1e-5", "--seed", "1"});
    if (o.code != 0) {
      g_table_error += "table1 --n " + std::to_string(n) + " failed: " + o.err;
      continue;
    }
    std::istringstream in(o.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const auto f = split(line, ',');
      g_table[{std::stoi(f[0]), std::stoi(f[1])}] = {std::stod(f[2]), std::stod(f[3])};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("  table1 --n %d: %.1f s\n", n, secs);
    std::fflush(stdout);
  }
}

Verdict criterion_table() {
  Verdict v;
  if (!g_table_error.empty()) return {false, g_table_error};
  double worst = 0.0;
  for (const auto& r : kReference) {
    const auto it = g_table.find({r.n, r.m});
    if (it == g_table.end()) return {false, "missing row"};
    const double e1 = std::abs(it->second.value - r.value);
    const double e2 = std::abs(it->second.value_hermitian - r.value_hermitian);
    worst = std::max({worst, e1, e2});
    if (e1 > 5e-3 || e2 > 5e-3) {
      v.pass = false;
      v.detail += format("(n=%g m=%g) ", r.n, r.m);
    }
  }
  v.detail += format("10 rows x 2 columns, max deviation %.2e (limit 5e-3)", worst);
  return v;
}

Verdict criterion_endpoints() {
  Verdict v;
  double worst = 0.0;
  for (auto [n, target] : {std::pair{2, 4.0}, std::pair{3, 6.0}}) {
    const auto it = g_table.find({n, n * n});
    if (it == g_table.end()) return {false, "missing row"};
    const double e = std::max(std::abs(it->second.value - target),
                              std::abs(it->second.value_hermitian - target));
    worst = std::max(worst, e);
    if (e > 1e-4) v.pass = false;
  }
  v.detail = format("n=2,m=4 -> 4 and n=3,m=9 -> 6, max deviation %.2e (limit 1e-4)", worst);
  return v;
}

Verdict criterion_transpose() {
  Verdict v;
  OptConfig cfg;
  cfg.num_starts = 50;
  cfg.seed = 3;
  double worst = 0.0;
  int cases = 0;
  for (Index n = 1; n <= 4; ++n) {
    for (Index m = 1; m <= 4; ++m) {
      const double got = induced_trace_norm_lb(transpose_map(n), m, cfg).value;
      const double e = std::abs(got - static_cast<double>(std::min(n, m)));
      worst = std::max(worst, e);
      ++cases;
      if (e > 1e-4) {
        v.pass = false;
        v.detail += format("(n=%g m=%g got %.6f) ", n, m, got);
      }
    }
  }
  v.detail += format("%g cases, max deviation %.2e (limit 1e-4)", cases, worst);
  return v;
}

Verdict criterion_no_perfect_strategy() {
  Verdict v;
  const LinearMapRep psi = psi_map(2, 2);
  const SystemLayout dims{2, 2};

  // (a) every witness at m = 3 lacks the optimal structure.
  OptConfig cfg;
  cfg.num_starts = 1000;
  cfg.stop_tol = 1e-5;
  cfg.seed = 1;
  int witnesses = 0;
  int structured = 0;
  int inconsistent = 0;
  double best = 0.0;
  for (InputMode mode : {InputMode::kGeneral, InputMode::kHermitian}) {
    for (const OptResult& r : optimize_all_starts(psi, 3, cfg, mode)) {
      const ComplexMatrix w = r.witness_u * r.witness_v.adjoint();
      const MultipartiteStructure s = extract_structure_multipartite(w, dims, 3);
      ++witnesses;
      if (s.decomposition.has_value()) ++structured;
      if (!s.consistent()) ++inconsistent;
      best = std::max(best, r.value);
    }
  }
  const bool a = structured == 0 && inconsistent == 0 && best < 4.0;

  // (b) tau on (C^2 ⊗ C^2) ⊗ C^4 reaches 4.
  const ComplexMatrix tau = max_entangled_state(4);
  const double value = psi_value(tau, 2, 2, 4);
  const MultipartiteStructure tau_structure = extract_structure_multipartite(tau, dims, 4);
  const bool b = std::abs(value - 4.0) <= 1e-10 && tau_structure.global_check &&
                 tau_structure.consistent();

  // (c) perfect discrimination at m = 4 with lambda_2.
  const CliOutput o = run_cli({"discriminate", "--n", "2", "--k", "2", "--m", "4"});
  double p = -1.0;
  const auto pos = o.out.find("success_probability=");
  if (o.code == 0 && pos != std::string::npos) p = std::stod(o.out.substr(pos + 20));
  const bool c = std::abs(p - 1.0) <= 1e-4;

  v.pass = a && b && c;
  v.detail = format("(a) %g witnesses at m=3, best %.6f, ", witnesses, best) +
             format("%g structured, %g inconsistent; ", structured, inconsistent) +
             format("(b) psi_value %.12f; (c) success probability %.8f", value, p);
  return v;
}

Verdict criterion_structure_roundtrip() {
  Verdict v;
  Rng rng(2024);
  double worst_residual = 0.0;
  double worst_sigma = 0.0;
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const Index n = 2 + rng.uniform_int(0, 1);
    const Index r = 1 + rng.uniform_int(0, 2);
    const Index m = n * r + rng.uniform_int(0, 2);
    const bool hermitian = rng.uniform() < 0.5;
    const auto opt = testing::construct_optimum(rng, n, r, m, hermitian);
    const auto d = extract_structure(opt.x, n, m);
    if (!d || d->r != r) {
      ++failures;
      continue;
    }
    const double sigma_err =
        (d->sigma.diagonal() - opt.truth.sigma.diagonal()).cwiseAbs().maxCoeff();
    worst_residual = std::max(worst_residual, d->residual);
    worst_sigma = std::max(worst_sigma, sigma_err);
    if (d->residual > 1e-8 || sigma_err > 1e-8) ++failures;
  }
  int densities = 0;
  int false_positives = 0;
  while (densities < 100) {
    const Index n = 2 + rng.uniform_int(0, 1);
    const Index m = n + rng.uniform_int(0, 3);
    const ComplexMatrix rho = random_density(rng, n * m, 1 + rng.uniform_int(0, n * m - 1));
    if (negativity(rho, SystemLayout{n, m}) >= static_cast<double>(n) - 1e-3) continue;
    ++densities;
    if (extract_structure(rho, n, m).has_value()) ++false_positives;
  }
  v.pass = failures == 0 && false_positives == 0;
  v.detail = format("100 instances, %g failures, max residual %.2e, ", failures, worst_residual) +
             format("max sigma error %.2e; 100 densities, %g decomposed", worst_sigma,
                    false_positives);
  return v;
}

Verdict criterion_reversibility() {
  Verdict v;
  Rng rng(77);
  int wrong = 0;
  int split_votes = 0;
  double worst_inverse = 0.0;
  for (int t = 0; t < 100; ++t) {
    const bool reversible = t < 50;
    const Index n = 2 + rng.uniform_int(0, 1);
    LinearMapRep ch = identity_map(1);
    if (reversible) {
      const Index r = 1 + rng.uniform_int(0, 1);
      ch = testing::random_reversible_channel(rng, n, r, n * r + rng.uniform_int(0, 2));
    } else {
      ch = random_channel(rng, n, n + rng.uniform_int(0, 2), 2 + rng.uniform_int(0, 1));
    }
    const ReversibilityReport rep = reversibility_check(ch, 20, 1000 + static_cast<std::uint64_t>(t));
    if (!rep.consistent()) ++split_votes;
    if (rep.verdict != reversible) ++wrong;
    if (reversible) {
      worst_inverse = std::max(worst_inverse, rep.left_inverse_error);
      if (!rep.left_inverse || rep.left_inverse_error > 1e-8) ++wrong;
    }
  }
  v.pass = wrong == 0 && split_votes == 0;
  v.detail = format("50 reversible + 50 not, %g wrong verdicts, %g split votes, ", wrong,
                    split_votes) +
             format("max ||J(Xi Phi) - J(I)|| %.2e (limit 1e-8)", worst_inverse);
  return v;
}

Verdict criterion_weak_measures() {
  Verdict v;
  std::size_t violations = 0;
  for (Index m : {2, 3, 4}) {
    violations += check_weak_measure_axioms(negativity_measure(), 2, m, 200, 11).size();
  }
  violations += check_weak_measure_axioms(coherent_information_measure(), 2, 2, 200, 11).size();
  const std::size_t broken = check_weak_measure_axioms(testing::broken_measure(), 2, 2, 200, 11).size();
  v.pass = violations == 0 && broken >= 1;
  v.detail = format("%g violations for negativity and coherent information, ",
                    static_cast<double>(violations)) +
             format("%g for the perturbed measure", static_cast<double>(broken));
  return v;
}

Verdict criterion_independent_strategies() {
  Verdict v;
  int mismatches = 0;
  int cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = n; m < n * n; ++m) {
      ++cases;
      if (independent_strategy_value(n, m) != independent_strategy_brute_force(n, m)) ++mismatches;
    }
  }
  v.pass = mismatches == 0;
  v.detail = format("%g (n,m) pairs, %g mismatches; ", cases, mismatches);
  for (auto [n, m, starts] : {std::tuple{5, 13, 20}, std::tuple{6, 20, 20}}) {
    OptConfig cfg;
    cfg.num_starts = starts;
    cfg.seed = 1;
    const auto t0 = std::chrono::steady_clock::now();
    const double lb = induced_trace_norm_lb(psi_map(n, 2), m, cfg).value;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const int formula = independent_strategy_value(n, m);
    if (lb < formula + 0.3) v.pass = false;
    v.detail += format("lb(%g,", n) + format("%g) = %.4f ", m, lb) +
                format("vs %g + 0.3 (%.0f s); ", formula, secs);
  }
  return v;
}

Verdict criterion_identities() {
  Verdict v;
  double worst_choi = 0.0;
  for (Index n : {2, 3, 4}) {
    const double lambda = werner_holevo_lambda(n);
    for (int k : {1, 2}) {
      const LinearMapRep lhs =
          weighted_difference(lambda, gamma_channel(n, k, 0), gamma_channel(n, k, 1));
      const ComplexMatrix rhs = psi_map(n, k).choi() / static_cast<double>(n * k);
      worst_choi = std::max(worst_choi, testing::max_abs_diff(lhs.choi(), rhs));
    }
  }
  Rng rng(99);
  int fidelity_failures = 0;
  double worst_product = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Index a = 1 + rng.uniform_int(0, 3);
    const Index b = 1 + rng.uniform_int(0, 3);
    const SystemLayout layout{a, b};
    const ComplexVector u = random_unit_vector(rng, a * b);
    const ComplexVector w = random_unit_vector(rng, a * b);
    if (!fidelity_partialtrace_identity_check(u, w, layout, 1e-9)) ++fidelity_failures;

    const ComplexMatrix x = random_ginibre(rng, a, b);
    const ComplexMatrix y = random_ginibre(rng, a, b);
    const ComplexMatrix outer = vec(x) * vec(y).adjoint();
    const double lhs = negativity(outer, layout, 1);
    worst_product = std::max(worst_product, std::abs(lhs - trace_norm(x) * trace_norm(y)));
  }
  v.pass = worst_choi <= 1e-12 && fidelity_failures == 0 && worst_product <= 1e-9;
  v.detail = format("Choi identity max error %.2e (limit 1e-12), ", worst_choi) +
             format("%g fidelity identity failures, ", fidelity_failures) +
             format("product formula max error %.2e (limit 1e-9)", worst_product);
  return v;
}

}  // namespace
}  // namespace ancilla

int main() {
  using ancilla::Verdict;
  struct Criterion {
    const char* name;
    Verdict (*check)();
  };
  const Criterion criteria[] = {
      {"1 table values", ancilla::criterion_table},
      {"2 exact endpoints", ancilla::criterion_endpoints},
      {"3 partial transpose norm", ancilla::criterion_transpose},
      {"4 no perfect strategy below m=4", ancilla::criterion_no_perfect_strategy},
      {"5 structure roundtrip", ancilla::criterion_structure_roundtrip},
      {"6 reversibility", ancilla::criterion_reversibility},
      {"7 weak measure axioms", ancilla::criterion_weak_measures},
      {"8 independent strategies", ancilla::criterion_independent_strategies},
      {"9 identity battery", ancilla::criterion_identities},
  };
  ancilla::compute_table();
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
