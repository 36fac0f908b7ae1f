// Copyright 2026 The ringcasimir Authors
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

#include "ringcasimir/casimir_lattice.hpp"
#include "ringcasimir/chiral_fermion.hpp"
#include "ringcasimir/pauli_algebra.hpp"
#include "ringcasimir/vqe_engine.hpp"

namespace {

using namespace ringcasimir;

void BM_DecomposeRandomHermitian(benchmark::State& state) {
  const int dim = 1 << state.range(0);
  const ComplexMatrix m = ComplexMatrix::Random(dim, dim);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(pauli::decompose(h));
}
BENCHMARK(BM_DecomposeRandomHermitian)->DenseRange(2, 8, 2);

void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ComplexMatrix m = ComplexMatrix::Random(1 << n, 1 << n);
  const auto p = pauli::decompose(0.5 * (m + m.adjoint()));
  std::vector<double> theta(static_cast<std::size_t>(vqe::ansatz_parameter_count(n, 1)), 0.3);
  const ComplexVector psi = vqe::ansatz_state(theta, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pauli::expectation(p, psi));
  state.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_Expectation)->DenseRange(2, 6, 2);

void BM_PartitionedRun(benchmark::State& state) {
  const lattice::ModeFamily f{lattice::Statistics::Boson, lattice::Boundary::Periodic,
                              static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(vqe::partitioned_run(f, {}));
}
BENCHMARK(BM_PartitionedRun)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DiracSea(benchmark::State& state) {
  const auto t = chiral::build_t({static_cast<int>(state.range(0)), 10.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(chiral::dirac_sea_energy(t));
}
BENCHMARK(BM_DiracSea)->RangeMultiplier(2)->Range(8, 128);

void BM_ExactSweep(benchmark::State& state) {
  for (auto _ : state) {
    double acc = 0.0;
    for (auto s : {lattice::Statistics::Boson, lattice::Statistics::Fermion}) {
      for (auto b : {lattice::Boundary::Periodic, lattice::Boundary::Twisted}) {
        for (int n = 1; n <= 8; ++n) acc += lattice::casimir_exact({s, b, n});
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ExactSweep);

}  // namespace
BENCHMARK_MAIN();
