// Copyright 2026 The cvtele Authors
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

#include "cvtele/hv_model.hpp"
#include "cvtele/kernels.hpp"
#include "cvtele/phase_space.hpp"
#include "cvtele/resource.hpp"
#include "cvtele/teleport_sim.hpp"

using namespace cvtele;

namespace {

kernels::ExecConfig exec_for(const benchmark::State& state) {
    return state.range(0) == 0 ? kernels::ExecConfig::serial() : kernels::ExecConfig::parallel();
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0 ? "serial"
                                       : "parallel/" + std::to_string(exec_for(state).threads()));
}

void BM_GaussianPairSum(benchmark::State& state) {
    auto a = resource::wigner_samples(StateSpec::fock(1), 32);
    auto b = resource::wigner_samples(StateSpec::superposition01(), 32);
    auto exec = exec_for(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resource::gaussian_overlap(a, b, 0.5, exec));
    }
    label(state);
}
BENCHMARK(BM_GaussianPairSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RunProtocol(benchmark::State& state) {
    sim::RunOptions opts;
    opts.exec = exec_for(state);
    const auto params = resource::resource_for_t(1.0);
    for (auto _ : state) {
        auto r = sim::run_protocol(StateSpec::coherent({1.0, 0.0}), params, 1 << 18, {42, 0}, opts);
        benchmark::DoNotOptimize(r.fidelity_mean);
    }
    state.SetItemsProcessed(state.iterations() * (1 << 18));
    label(state);
}
BENCHMARK(BM_RunProtocol)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheatRun(benchmark::State& state) {
    hv::CheatOptions opts;
    opts.exec = exec_for(state);
    for (auto _ : state) {
        auto r = hv::cheat_run(StateSpec::superposition01(), 1 << 18, {42, 0}, opts);
        benchmark::DoNotOptimize(r.mean);
    }
    state.SetItemsProcessed(state.iterations() * (1 << 18));
    label(state);
}
BENCHMARK(BM_CheatRun)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GridMin(benchmark::State& state) {
    const auto points = hv::SpatialGrid{}.points();
    const auto psi = StateSpec::fock(3);
    auto exec = exec_for(state);
    for (auto _ : state) {
        auto m = kernels::grid_min(
            points, [&](Complex nu) { return phase::s_ordered_series(psi, nu, 0.5); }, exec);
        benchmark::DoNotOptimize(m.value);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(points.size()));
    label(state);
}
BENCHMARK(BM_GridMin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
