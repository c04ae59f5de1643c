// Serial reference against the OpenMP kernels. Set OMP_NUM_THREADS to vary
// the parallel side; the serial side ignores it.

#include <benchmark/benchmark.h>

#include "m0n/aut.hpp"
#include "m0n/serial.hpp"
#include "m0n/sweep.hpp"
#include "m0n/toric.hpp"

namespace {

void BM_FunctionalsParallel(benchmark::State& state) {
  const m0n::Fan fan = m0n::losev_manin_fan(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m0n::cone_halfline_functionals(fan, 2));
}

void BM_FunctionalsSerial(benchmark::State& state) {
  const m0n::Fan fan = m0n::losev_manin_fan(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m0n::serial::cone_halfline_functionals(fan, 2));
}

void BM_AutOrderParallel(benchmark::State& state) {
  const m0n::BoundaryGraph g = m0n::boundary_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m0n::graph_automorphism_order(g));
}

// Counts every leaf, so it grows like n! and stays at small n.
void BM_AutOrderSerial(benchmark::State& state) {
  const m0n::BoundaryGraph g = m0n::boundary_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m0n::serial::graph_automorphism_order(g.adjacency));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(m0n::cremona_sweep(static_cast<int>(state.range(0))));
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(m0n::serial::cremona_sweep(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_FunctionalsParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FunctionalsSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutOrderParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutOrderSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
