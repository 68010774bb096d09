// Copyright 2026 The maxent Authors
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

#include "maxent/certify.hpp"
#include "maxent/decompose.hpp"
#include "maxent/synthesize.hpp"
#include "maxent/verify.hpp"

namespace {

void BM_ExtractHaar(benchmark::State& state) {
  const int dA = static_cast<int>(state.range(0));
  const int dB = static_cast<int>(state.range(1));
  const auto gate = maxent::haar_random_gate(dA, dB, 1);
  for (auto _ : state) benchmark::DoNotOptimize(maxent::extract(gate));
}
BENCHMARK(BM_ExtractHaar)->Args({2, 4})->Args({3, 9})->Args({4, 16});

void BM_CertifySwap(benchmark::State& state) {
  const auto gate = maxent::swap_gate(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maxent::certify(gate));
}
BENCHMARK(BM_CertifySwap)->DenseRange(2, 5);

void BM_CertifyFirstColumns(benchmark::State& state) {
  const int dA = static_cast<int>(state.range(0));
  const int dB = static_cast<int>(state.range(1));
  const auto gate = maxent::first_columns_gate({0, dA, dB});
  for (auto _ : state) benchmark::DoNotOptimize(maxent::certify(gate));
}
BENCHMARK(BM_CertifyFirstColumns)->Args({2, 4})->Args({2, 5})->Args({3, 9})
    ->Unit(benchmark::kMillisecond);

void BM_CertifyAdjointFirstColumns(benchmark::State& state) {
  const auto gate = maxent::first_columns_gate({0, 2, 4});
  for (auto _ : state) benchmark::DoNotOptimize(maxent::certify_adjoint(gate));
}
BENCHMARK(BM_CertifyAdjointFirstColumns)->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const auto gate = maxent::first_columns_gate({0, 3, 9});
  const auto cert = maxent::certify(gate);
  for (auto _ : state) benchmark::DoNotOptimize(maxent::report(gate, cert));
}
BENCHMARK(BM_Report)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
