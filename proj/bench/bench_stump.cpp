// Copyright 2026 The StumpBoost Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel vs. serial kernels: presort and the per-round stump search.

#include <benchmark/benchmark.h>

#include <random>

#include "stumpboost/stump.hpp"

namespace {

using namespace stumpboost;

LabeledFeatureSet make_set(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(1);
  std::normal_distribution<float> normal;
  std::vector<float> values(n * d);
  for (auto& v : values) v = normal(rng);
  std::vector<std::int32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int32_t>(rng() % 2);
  return LabeledFeatureSet(n, d, std::move(values), std::move(labels));
}

struct Problem {
  LabeledFeatureSet set;
  SortedColumns sorted;
  std::vector<int> targets;
  std::vector<double> weights;

  Problem(std::size_t n, std::size_t d)
      : set(make_set(n, d)), sorted(presort(set)), targets(n), weights(n, 1.0 / static_cast<double>(n)) {
    for (std::size_t i = 0; i < n; ++i) targets[i] = set.labels()[i] ? 1 : -1;
  }
};

void BM_FitStumpParallel(benchmark::State& state) {
  Problem p(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fit_stump(p.set, p.targets, p.weights, p.sorted));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_FitStumpSerial(benchmark::State& state) {
  Problem p(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fit_stump_serial(p.set, p.targets, p.weights, p.sorted));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_PresortParallel(benchmark::State& state) {
  const auto set = make_set(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(presort(set));
}

void BM_PresortSerial(benchmark::State& state) {
  const auto set = make_set(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(presort_serial(set));
}


BENCHMARK(BM_FitStumpParallel)->ArgsProduct({{1000, 5000}, {1024, 4096}})->UseRealTime();
BENCHMARK(BM_FitStumpSerial)->ArgsProduct({{1000, 5000}, {1024, 4096}})->UseRealTime();
BENCHMARK(BM_PresortParallel)->Args({2000, 1024})->UseRealTime();
BENCHMARK(BM_PresortSerial)->Args({2000, 1024})->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
