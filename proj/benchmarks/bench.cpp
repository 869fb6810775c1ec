// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "numrad/bounds.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/linalg.hpp"
#include "numrad/numrange.hpp"

namespace {

using namespace numrad;

ComplexMatrix sample(EnsembleKind kind, int n) { return generate({kind, n, 17}); }

void BM_NumericalRadius(benchmark::State& state) {
  const ComplexMatrix m = sample(EnsembleKind::Ginibre, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(m, 1e-9).value);
}
BENCHMARK(BM_NumericalRadius)->RangeMultiplier(2)->Range(2, 32);

void BM_HermEig(benchmark::State& state) {
  const ComplexMatrix h = sample(EnsembleKind::GUE, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h).eigenvalues.back());
}
BENCHMARK(BM_HermEig)->RangeMultiplier(2)->Range(2, 32);

void BM_LambdaMax(benchmark::State& state) {
  const ComplexMatrix h = sample(EnsembleKind::GUE, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_max(h));
}
BENCHMARK(BM_LambdaMax)->RangeMultiplier(2)->Range(2, 32);

void BM_EvaluateBound(benchmark::State& state) {
  const auto id = static_cast<BoundId>(state.range(0));
  const BlockMatrix2x2 blocks(sample(EnsembleKind::Ginibre, 8), sample(EnsembleKind::GUE, 8),
                              sample(EnsembleKind::Normal, 8), sample(EnsembleKind::Ginibre, 8));
  BoundParams p;
  p.gauge = GaugeH::power(2.0);
  p.pair = FactorPair{0.5};
  p.quad = FactorQuad{{0.5}, {0.5}};
  p.holder = HolderPair{2.0, 2.0};
  p.r = 2.0;
  p.alpha = 0.5;
  p.n = 2;
  state.SetLabel(std::string(to_string(id)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_bound(id, blocks, p).slack);
}
BENCHMARK(BM_EvaluateBound)->DenseRange(0, static_cast<int>(kBoundCount) - 1);

}  // namespace

BENCHMARK_MAIN();
