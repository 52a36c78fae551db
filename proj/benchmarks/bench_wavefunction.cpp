#include <benchmark/benchmark.h>

#include "mrey/spectrum.hpp"
#include "mrey/wavefunction.hpp"

namespace {

const mrey::PotentialParams kDeep{0.0, 0.0, 10.0, 0.5};
const mrey::PhysicalConstants kConsts{};

void BM_BuildWave(benchmark::State& state) {
  const auto level = mrey::energy(kDeep, kConsts, static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(mrey::build_wave(kDeep, kConsts, level));
}
BENCHMARK(BM_BuildWave)->Arg(0)->Arg(3);

void BM_Normalize(benchmark::State& state) {
  const auto wave = mrey::build_wave(kDeep, kConsts, mrey::energy(kDeep, kConsts, 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(mrey::normalize(wave));
}
BENCHMARK(BM_Normalize);

}  // namespace
