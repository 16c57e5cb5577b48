// Copyright 2026 The qnc Authors
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
// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qnc/analysis.hpp"
#include "qnc/bounds.hpp"

using namespace qnc;

namespace {

void BM_WorstCaseSerial(benchmark::State &state) {
    auto obj = sink_objective(ProtocolId::xqq, 1);
    SearchOptions opt{static_cast<size_t>(state.range(0)), static_cast<size_t>(state.range(0)) / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(worst_case_fidelity_serial(obj, opt).min_value);
    }
}

void BM_WorstCaseParallel(benchmark::State &state) {
    auto obj = sink_objective(ProtocolId::xqq, 1);
    SearchOptions opt{static_cast<size_t>(state.range(0)), static_cast<size_t>(state.range(0)) / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(worst_case_fidelity(obj, opt).min_value);
    }
}

void BM_FalsifierSerial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem1_falsifier_serial(static_cast<uint64_t>(state.range(0)), 1).max_min_fidelity);
    }
}

void BM_FalsifierParallel(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem1_falsifier(static_cast<uint64_t>(state.range(0)), 1).max_min_fidelity);
    }
}

}  // namespace

BENCHMARK(BM_WorstCaseSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WorstCaseParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FalsifierSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FalsifierParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
