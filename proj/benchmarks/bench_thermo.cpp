#include <benchmark/benchmark.h>

#include <vector>

#include "mrey/thermo.hpp"

namespace {

mrey::thermo::ThermoInput input(double beta, double lambda) {
  mrey::thermo::ThermoInput in;
  in.coeffs = mrey::spectral_coefficients({0.0, 0.0, 1.0, 0.5}, {}, 0);
  in.beta = beta;
  in.lambda = lambda;
  return in;
}

void BM_Evaluate(benchmark::State& state) {
  const auto in = input(static_cast<double>(state.range(0)) / 10.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(mrey::thermo::evaluate(in));
}
// beta = 0.1, 1, 100
BENCHMARK(BM_Evaluate)->Arg(1)->Arg(10)->Arg(1000);

void BM_EvaluateWideLambda(benchmark::State& state) {
  const auto in = input(1.0, 700.0);
  for (auto _ : state) benchmark::DoNotOptimize(mrey::thermo::evaluate(in));
}
BENCHMARK(BM_EvaluateWideLambda);

void BM_LogPartitionDiscrete(benchmark::State& state) {
  std::vector<double> levels(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < levels.size(); ++i) levels[i] = -1.0 + 0.01 * static_cast<double>(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mrey::thermo::log_partition_discrete(levels, 2.0));
  }
}
BENCHMARK(BM_LogPartitionDiscrete)->Arg(16)->Arg(1024);

}  // namespace
