// Copyright 2026 The logicint Authors
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

#include "logicint/gate_algebra.hpp"
#include "logicint/ising_transfer.hpp"
#include "logicint/logic_integral.hpp"
#include "logicint/operator_core.hpp"
#include "logicint/span_analysis.hpp"
#include "logicint/spin_system.hpp"

namespace {

using namespace logicint;

void BM_SeriesExpand(benchmark::State& state) {
  const auto sys = BondSystem::chain(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(series_expand(sys, 0.5, 15));
}
BENCHMARK(BM_SeriesExpand)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HermitianEvolve(benchmark::State& state) {
  const auto h = build_hamiltonian(BondSystem::chain(static_cast<std::size_t>(state.range(0)), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_evolve(h, 0.5));
}
BENCHMARK(BM_HermitianEvolve)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_McEstimate(benchmark::State& state) {
  const auto sys = BondSystem::chain(2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(mc_estimate(sys, 0.3, static_cast<std::size_t>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McEstimate)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

void BM_UnitModulusSearch(benchmark::State& state) {
  const ComplexMatrix t = 2.0 * transfer_matrix(unitary_couplings(2, 0.0)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(unit_modulus_search(t, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_UnitModulusSearch)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_PartitionCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partition_check({3, 0.3, -0.2}, 3));
}
BENCHMARK(BM_PartitionCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
