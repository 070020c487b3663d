// Copyright 2026 The anymask Authors
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

#include <benchmark/benchmark.h>

#include "anymask/braid.hpp"
#include "anymask/latin.hpp"
#include "anymask/masker.hpp"
#include "anymask/teleport.hpp"

using namespace anymask;

static void BM_EncodeVerifyAbelian(benchmark::State& state) {
    const auto scheme = abelian_d4_scheme();
    std::uint64_t t = 0;
    for (auto _ : state) {
        const auto c = random_unit_coeffs(4, trial_seed(1, t++));
        benchmark::DoNotOptimize(verify_masking(scheme.encode(c), scheme.alphabet()));
    }
}
BENCHMARK(BM_EncodeVerifyAbelian);

static void BM_EncodeVerifyIsing(benchmark::State& state) {
    const auto scheme = ising_cyclic_scheme(1);
    std::uint64_t t = 0;
    for (auto _ : state) {
        const auto c = random_unit_coeffs(3, trial_seed(1, t++));
        benchmark::DoNotOptimize(verify_masking(scheme.encode(c), scheme.alphabet()));
    }
}
BENCHMARK(BM_EncodeVerifyIsing);

static void BM_BraidSequence(benchmark::State& state) {
    const auto scheme = ising_cyclic_scheme(1);
    const auto ops = parse_ops("t3;xBC;cBA");
    const auto encoded = scheme.encode(random_unit_coeffs(3, 5));
    for (auto _ : state) benchmark::DoNotOptimize(apply(scheme.model(), encoded, ops));
}
BENCHMARK(BM_BraidSequence);

static void BM_BraidCampaign(benchmark::State& state) {
    const auto scheme = abelian_d4_scheme();
    const auto ops = parse_ops("xAB;xBC;cCA");
    for (auto _ : state) benchmark::DoNotOptimize(verify_invariance(scheme, ops, 100, kDefaultTolerance, 3));
}
BENCHMARK(BM_BraidCampaign)->Unit(benchmark::kMillisecond);

static void BM_FindMolsPair(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(find_mols_pair(order));
}
BENCHMARK(BM_FindMolsPair)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_Teleport(benchmark::State& state) {
    std::uint64_t t = 0;
    for (auto _ : state) {
        const auto c = random_unit_coeffs(3, trial_seed(9, t++));
        benchmark::DoNotOptimize(teleport::run_teleport(c));
    }
}
BENCHMARK(BM_Teleport);
BENCHMARK_MAIN();
