// Copyright 2026 The logcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS / LOGCOUNT_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "logcount/labeling.hpp"
#include "logcount/metrics.hpp"
#include "logcount/morphology.hpp"
#include "logcount/parallel.hpp"
#include "logcount/random.hpp"
#include "logcount/synth.hpp"

namespace {

using namespace logcount;

BinaryMask pile_mask(int side, std::uint64_t seed) {
  PileSpec s;
  s.resolution = Resolution(side, side);
  s.n_logs = side / 8;
  s.noise_speckles = side / 4;
  s.seed = seed;
  return generate(s).mask;
}

void BM_ErodeSerial(benchmark::State& state) {
  const auto m = pile_mask(static_cast<int>(state.range(0)), 1);
  const auto se = StructuringElement::box(3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::erode(m, se));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_ErodeParallel(benchmark::State& state) {
  const auto m = pile_mask(static_cast<int>(state.range(0)), 1);
  const auto se = StructuringElement::box(3);
  for (auto _ : state) benchmark::DoNotOptimize(erode(m, se));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_DilateSerial(benchmark::State& state) {
  const auto m = pile_mask(static_cast<int>(state.range(0)), 2);
  const auto se = StructuringElement::cross(5);
  for (auto _ : state) benchmark::DoNotOptimize(serial::dilate(m, se));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_DilateParallel(benchmark::State& state) {
  const auto m = pile_mask(static_cast<int>(state.range(0)), 2);
  const auto se = StructuringElement::cross(5);
  for (auto _ : state) benchmark::DoNotOptimize(dilate(m, se));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_ConfusionSerial(benchmark::State& state) {
  const auto a = pile_mask(static_cast<int>(state.range(0)), 3);
  const auto b = pile_mask(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(serial::confusion(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

void BM_ConfusionParallel(benchmark::State& state) {
  const auto a = pile_mask(static_cast<int>(state.range(0)), 3);
  const auto b = pile_mask(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(confusion(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

// Labeling is single-threaded per image; batches parallelize across images.
std::vector<BinaryMask> batch(int n) {
  std::vector<BinaryMask> out;
  for (int i = 0; i < n; ++i) out.push_back(pile_mask(256, 100 + i));
  return out;
}

void BM_LabelBatchSerial(benchmark::State& state) {
  const auto masks = batch(32);
  for (auto _ : state) {
    int total = 0;
    for (const auto& m : masks) total += label_union_find(m, Connectivity::eight).component_count();
    benchmark::DoNotOptimize(total);
  }
}

void BM_LabelBatchParallel(benchmark::State& state) {
  const auto masks = batch(32);
  const auto n = static_cast<int>(masks.size());
  for (auto _ : state) {
    int total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int i = 0; i < n; ++i) total += label_union_find(masks[i], Connectivity::eight).component_count();
    benchmark::DoNotOptimize(total);
  }
}

BENCHMARK(BM_ErodeSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_ErodeParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_DilateSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_DilateParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_ConfusionSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_ConfusionParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_LabelBatchSerial);
BENCHMARK(BM_LabelBatchParallel);

}  // namespace

int main(int argc, char** argv) {
  logcount::apply_thread_cap_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
