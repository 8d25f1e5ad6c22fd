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

#include <benchmark/benchmark.h>

#include "ancilla/channels.hpp"
#include "ancilla/norms_opt.hpp"
#include "ancilla/structure.hpp"

namespace {

using ancilla::ComplexMatrix;

void BM_TraceNorm(benchmark::State& state) {
  ancilla::Rng rng(7);
  const ComplexMatrix m = ancilla::random_ginibre(rng, state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ancilla::trace_norm(m));
}
BENCHMARK(BM_TraceNorm)->Arg(16)->Arg(54)->Arg(128);

void BM_PartialTranspose(benchmark::State& state) {
  ancilla::Rng rng(7);
  const auto n = state.range(0);
  const ComplexMatrix m = ancilla::random_ginibre(rng, n * n, n * n);
  const ancilla::SystemLayout layout{n, n};
  for (auto _ : state) benchmark::DoNotOptimize(ancilla::partial_transpose(m, layout, 1));
}
BENCHMARK(BM_PartialTranspose)->Arg(3)->Arg(6)->Arg(9);

void BM_ApplyExtended(benchmark::State& state) {
  const auto m = state.range(0);
  const ancilla::LinearMapRep psi = ancilla::psi_map(3, 2);
  ancilla::Rng rng(7);
  const ComplexMatrix x = ancilla::random_density(rng, 9 * m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ancilla::apply_extended(psi, x, m));
}
BENCHMARK(BM_ApplyExtended)->Arg(3)->Arg(9);

// One Table 1 cell with a handful of starts.
void BM_PsiLowerBound(benchmark::State& state) {
  const auto n = state.range(0);
  const auto m = state.range(1);
  const ancilla::LinearMapRep psi = ancilla::psi_map(n, 2);
  ancilla::OptConfig cfg;
  cfg.num_starts = 4;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ancilla::induced_trace_norm_lb(psi, m, cfg).value);
  }
}
BENCHMARK(BM_PsiLowerBound)->Args({2, 3})->Args({3, 8})->Args({5, 13})->Unit(benchmark::kMillisecond);

void BM_PsiLowerBoundHermitian(benchmark::State& state) {
  const ancilla::LinearMapRep psi = ancilla::psi_map(state.range(0), 2);
  ancilla::OptConfig cfg;
  cfg.num_starts = 4;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ancilla::induced_trace_norm_hermitian_lb(psi, state.range(1), cfg).value);
  }
}
BENCHMARK(BM_PsiLowerBoundHermitian)->Args({2, 3})->Args({3, 8})->Unit(benchmark::kMillisecond);

void BM_ExtractStructure(benchmark::State& state) {
  const auto n = state.range(0);
  ancilla::Rng rng(7);
  const ComplexMatrix u = ancilla::random_isometry(rng, 2 * n, 2 * n);
  ancilla::StructureDecomposition d;
  d.r = 2;
  d.sigma = ComplexMatrix::Zero(2, 2);
  d.sigma(0, 0) = 0.7;
  d.sigma(1, 1) = 0.3;
  d.u = u;
  d.v = u;
  const ComplexMatrix x = ancilla::reconstruct(d, n);
  for (auto _ : state) benchmark::DoNotOptimize(ancilla::extract_structure(x, n, 2 * n));
}
BENCHMARK(BM_ExtractStructure)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
