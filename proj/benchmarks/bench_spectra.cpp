#include <benchmark/benchmark.h>

#include "dddp/bound_states.hpp"
#include "dddp/complex_spectra.hpp"
#include "dddp/scattering.hpp"

#ifdef DDDP_BENCH_TABLE1
#include "table1.hpp"
#endif

namespace {

void BM_Coefficients(benchmark::State& state) {
  const dddp::DeltaPair pot{3.0, -2.9, 1.0};
  double e = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dddp::coefficients(pot, e));
    e = e < 100.0 ? e + 0.01 : 0.5;
  }
}
BENCHMARK(BM_Coefficients);

void BM_SquareLimitOracle(benchmark::State& state) {
  const dddp::DeltaPair pot{-5.0, -5.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(dddp::oracle_square_limit(pot, 3.0, 1e-4));
}
BENCHMARK(BM_SquareLimitOracle);

void BM_BoundStates(benchmark::State& state) {
  const dddp::WellPair w{11.0, 12.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(dddp::bound_states(w));
}
BENCHMARK(BM_BoundStates);

void BM_LevelSweep(benchmark::State& state) {
  const dddp::WellPair w{10.0, 10.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dddp::level_sweep(w, dddp::SweepParameter::depth2, 1.0, 30.0, 300));
  }
}
BENCHMARK(BM_LevelSweep)->Unit(benchmark::kMillisecond);

void BM_Resonances(benchmark::State& state) {
  const dddp::DeltaPair pot{3.0, 2.9, 1.0};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dddp::resonances(pot, n));
}
BENCHMARK(BM_Resonances)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AsymmetricPt(benchmark::State& state) {
  const dddp::DeltaPair pot{30.0, 29.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(dddp::perfect_transmission_energies(pot, 4));
}
BENCHMARK(BM_AsymmetricPt)->Unit(benchmark::kMillisecond);

void BM_HardBox(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dddp::hardbox_even_eigenvalues(3.0, 1.0, 8));
}
BENCHMARK(BM_HardBox);

#ifdef DDDP_BENCH_TABLE1
void BM_Table1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dddp::cli::reproduce_table1());
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);
#endif

}  // namespace

BENCHMARK_MAIN();
