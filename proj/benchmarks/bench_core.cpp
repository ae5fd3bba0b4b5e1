// Copyright 2026 The dicke-noise Authors
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
#include "dicke/bounds.hpp"
#include "dicke/channels.hpp"
#include "dicke/discriminators.hpp"
#include "dicke/oracle.hpp"
#include "dicke/paulidecomp.hpp"
#include "dicke/qcore.hpp"
#include "dicke/witnesses.hpp"

#include <benchmark/benchmark.h>

using namespace dicke;

static void BM_ApplyChannel(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho(symmetric_dicke_state(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_channel(rho, NoiseChannel::ad(0.2)));
    }
}
BENCHMARK(BM_ApplyChannel)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_OracleChannel(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto psi = oracle::dicke_vector(n, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::channel_output(psi, n, NoiseChannel::dp(0.2)));
    }
}
BENCHMARK(BM_OracleChannel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Heisenberg(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const PauliSum op = characteristic_operator(n).op;
    for (auto _ : state) {
        benchmark::DoNotOptimize(heisenberg(op, NoiseChannel::ad(0.3)));
    }
}
BENCHMARK(BM_Heisenberg)->DenseRange(4, 10, 2);

static void BM_BiseparableBound(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biseparable_bound(n, -1.0));
    }
}
BENCHMARK(BM_BiseparableBound)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_OptimizeFilter(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_filter(n, NoiseChannel::ad(0.2)));
    }
}
BENCHMARK(BM_OptimizeFilter)->Arg(6)->Arg(20)->Arg(50);

static void BM_SettingSynthesis(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const PauliSum target = correlation_tensor(symmetric_dicke_state(n)).to_operator();
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize_settings(target));
    }
}
BENCHMARK(BM_SettingSynthesis)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_GhzSearch(benchmark::State &state) {
    GhzSearchOptions opts;
    opts.restarts = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ghz_class_bound(6, opts));
    }
}
BENCHMARK(BM_GhzSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
