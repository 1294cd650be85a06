/*
 * Copyright 2026 The zmpo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "zmpo/linalg.hpp"
#include "zmpo/mpo.hpp"
#include "zmpo/mpo_builder.hpp"
#include "zmpo/mps.hpp"
#include "zmpo/oracle.hpp"
#include "zmpo/poles.hpp"
#include "zmpo/random.hpp"
#include "zmpo/scan.hpp"
#include "zmpo/signals.hpp"
#include "zmpo/transform.hpp"

namespace zmpo {
namespace {

TransformParams params_for(std::size_t n) {
  TransformParams p;
  p.n = n;
  return p;
}

void BM_Svd(benchmark::State& state) {
  const auto size = static_cast<Eigen::Index>(state.range(0));
  Rng rng(1);
  Matrix m(size, size);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(rng.normal(), rng.normal());
  for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_EncodeAndLift(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SignalVector x = gen_signal(SignalKind::kGaussianNoise, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift_to_paired(encode_signal_mps(x, 1e-15), 1e-15));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(x.size()));
}
BENCHMARK(BM_EncodeAndLift)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_BuildZt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_zt_mpo(n, kTwoPi, kTwoPi, 1e-15));
}
BENCHMARK(BM_BuildZt)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

// Full pipeline (encode, lift, build, apply) per signal kind.
void BM_Transform(benchmark::State& state, SignalKind kind) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SignalVector x = gen_signal(kind, n);
  const TransformParams p = params_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(transform(x, p));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(x.size()));
}
BENCHMARK_CAPTURE(BM_Transform, sinusoid, SignalKind::kSinusoid)
    ->DenseRange(8, 13)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);
BENCHMARK_CAPTURE(BM_Transform, gaussian_noise, SignalKind::kGaussianNoise)
    ->DenseRange(8, 13)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

// Core phase only: the operator is built once outside the timed loop.
void BM_ApplyPrebuilt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SignalVector x = gen_signal(SignalKind::kMultiDecay, n);
  const TransformParams p = params_for(n);
  const MatrixProductOperator zt = build_zt_mpo(n, p.omega_r, p.omega_i, p.tau);
  for (auto _ : state) benchmark::DoNotOptimize(transform(x, p, zt));
}
BENCHMARK(BM_ApplyPrebuilt)->DenseRange(8, 13)->Unit(benchmark::kMillisecond);

void BM_GridScan(benchmark::State& state) {
  const std::size_t n = 12;
  const TransformParams p = params_for(n);
  const GridEvaluator eval(transform(gen_signal(SignalKind::kCusp, n), p).output, p);
  const auto count = static_cast<std::size_t>(state.range(0));
  const GridWindow w{0, 0, p.grid_size() / count, count};
  for (auto _ : state) benchmark::DoNotOptimize(eval.scan(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count * count));
}
BENCHMARK(BM_GridScan)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_FindPoles(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TransformParams p = params_for(n);
  const GridEvaluator eval(transform(gen_signal(SignalKind::kDampedCosine, n), p).output, p);
  for (auto _ : state) benchmark::DoNotOptimize(find_poles(eval));
}
BENCHMARK(BM_FindPoles)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zmpo

BENCHMARK_MAIN();
