// Copyright 2026 The privcap Authors
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

// Serial reference kernels vs their OpenMP counterparts. The thread count is
// the benchmark argument; 1 selects the serial path.

#include <benchmark/benchmark.h>

#include "privcap/capacity.hpp"
#include "privcap/ensembles.hpp"
#include "privcap/lemma_bench.hpp"

namespace {

using namespace privcap;

ExecPolicy policy(const benchmark::State& state) {
    return ExecPolicy{static_cast<int>(state.range(0))};
}

void BM_HaarTwirl(benchmark::State& state) {
    const std::size_t d = 3;
    const CMatrix m = tensor(clock_gate(d, 1), clock_gate(d, -1));
    const ExecPolicy exec = policy(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_twirl_monte_carlo(m, d, 4096, {1, 2}, exec));
    }
}

void BM_AvgDephasedEntropy(benchmark::State& state) {
    BenchOptions opt;
    opt.exec = policy(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_avg_dephased_entropy(4, 4096, {1, 3}, opt));
    }
}

void BM_FramePotential(benchmark::State& state) {
    const UnitaryEnsemble e = clifford_group(3);
    const ExecPolicy exec = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(frame_potential(e, exec));
}

void BM_ChannelApply(benchmark::State& state) {
    const FiniteVChannel ch(haar_ensemble(3, 512, {1, 4}));
    const DensityMatrix rho = standard_form_input(StandardFormInput::uniform_computational(3, 1));
    const ExecPolicy exec = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(coherent_information(ch, rho, exec));
}

BENCHMARK(BM_HaarTwirl)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvgDephasedEntropy)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FramePotential)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChannelApply)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
