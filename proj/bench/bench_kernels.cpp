// Copyright 2026 The chordlab Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "chordlab/enumerate.hpp"
#include "chordlab/verify.hpp"

namespace {

using chordlab::DiagramClass;

void BM_CountSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordlab::count_class(DiagramClass::connected, n));
}

void BM_CountParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chordlab::count_class_parallel(DiagramClass::connected, n));
  }
}

void BM_PhiSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordlab::certify_phi(n).distinct_images);
}

void BM_PhiParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordlab::certify_phi_parallel(n).distinct_images);
}

void BM_ThetaSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordlab::certify_theta(n).distinct_images);
}

void BM_ThetaParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chordlab::certify_theta_parallel(n).distinct_images);
}

}  // namespace

BENCHMARK(BM_CountSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PhiSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ThetaSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
