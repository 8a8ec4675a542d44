// Copyright 2026 The overdurfee Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstddef>

#include <benchmark/benchmark.h>

#include "overdurfee/durfee.hpp"
#include "overdurfee/enumerate.hpp"
#include "overdurfee/generating_functions.hpp"
#include "overdurfee/rrg.hpp"
#include "overdurfee/weighted_maps.hpp"

namespace od = overdurfee;

static void BM_EnumerateOverpartitions(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    od::for_each_overpartition(n, [&](const od::Overpartition& x) { count += x.size(); });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateOverpartitions)->Arg(10)->Arg(20)->Arg(25);

static void BM_Dissect(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto all = od::overpartitions_of(n);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& x : all) total += od::num_successive_squares(x);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_Dissect)->Arg(15)->Arg(20);

static void BM_GfDkk(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(od::gf_dkk(3, order));
}
BENCHMARK(BM_GfDkk)->Arg(25)->Arg(50)->Arg(100);

static void BM_OverpartitionsProduct(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(od::gf_overpartitions_product(order));
}
BENCHMARK(BM_OverpartitionsProduct)->Arg(100)->Arg(400);

static void BM_CountDki(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(od::count_dki(n, 3, 2));
}
BENCHMARK(BM_CountDki)->Arg(15)->Arg(20);

static void BM_FoldSweep(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(od::verify_weighted_identity(n, 2).fiber_sum);
}
BENCHMARK(BM_FoldSweep)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK_MAIN();
