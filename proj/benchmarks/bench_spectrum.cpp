#include <benchmark/benchmark.h>

#include "mrey/nu_engine.hpp"
#include "mrey/spectrum.hpp"

namespace {

const mrey::PotentialParams kParams{0.0, 0.0, 1.0, 0.5};
const mrey::PhysicalConstants kConsts{};

void BM_ClosedFormEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mrey::energy(kParams, kConsts, n, 0));
  }
}
BENCHMARK(BM_ClosedFormEnergy)->Arg(0)->Arg(3);

void BM_OracleEnergy(benchmark::State& state) {
  const mrey::PotentialParams deep{0.0, 0.0, 10.0, 0.5};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mrey::nu::solve_mrey_energy(deep, kConsts, n, 0));
  }
}
BENCHMARK(BM_OracleEnergy)->Arg(0)->Arg(2);

void BM_SpectrumTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mrey::spectrum_table(kParams, kConsts, 5, 3));
  }
}
BENCHMARK(BM_SpectrumTable);

}  // namespace
