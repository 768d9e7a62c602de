// Copyright 2026 The qsynth Authors
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

#include "qsynth/amplitude_tree.hpp"
#include "qsynth/grover.hpp"
#include "qsynth/linalg.hpp"
#include "qsynth/qram.hpp"
#include "qsynth/state_circuit.hpp"
#include "qsynth/teleport.hpp"
#include "qsynth/unitsynth.hpp"

namespace {

using namespace qsynth;

void BM_GroverRun(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    MarkedReflectionOracle oracle(n, BitString{n, (std::uint64_t{1} << n) - 1});
    benchmark::DoNotOptimize(run_exact_grover(n, oracle));
  }
}
BENCHMARK(BM_GroverRun)->DenseRange(2, 10, 2);

void BM_Qacf0Build(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Rng rng(n);
  const StateVector psi = random_state(n, rng);
  for (auto _ : st) benchmark::DoNotOptimize(build_qacf0_state_circuit(psi));
}
BENCHMARK(BM_Qacf0Build)->DenseRange(2, 8, 2);

void BM_CompactStatePrep(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Rng rng(n);
  const AmplitudeTree tree = amplitude_tree(random_state(n, rng));
  for (auto _ : st) benchmark::DoNotOptimize(compact_state_synthesis(tree));
}
BENCHMARK(BM_CompactStatePrep)->DenseRange(1, 4);

void BM_ViaQramDistance(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Rng rng(n);
  const Matrix u = random_unitary(n, rng);
  const QramOracle a = functional_qram(u);
  const CircuitIR c = implement_via_qram(a, false);
  for (auto _ : st) benchmark::DoNotOptimize(implementation_distance(c, {{kQramOracle, a.binding()}}, u));
}
BENCHMARK(BM_ViaQramDistance)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_DepthReport(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(depth_synthesis_report(n, 0));
}
BENCHMARK(BM_DepthReport)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Teleport(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Rng rng(n);
  const Matrix u = random_unitary(n, rng);
  const StateVector psi = random_state(n, rng);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(teleport_synthesize(u, psi, seed++));
}
BENCHMARK(BM_Teleport)->DenseRange(1, 2);

}  // namespace

BENCHMARK_MAIN();
