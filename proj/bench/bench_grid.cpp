// Serial reference vs OpenMP grid evaluation of the phi components.

#include <benchmark/benchmark.h>

#include "sw/kernels/grid.hpp"

using namespace sw;

namespace {

const radial::RadialModel& model() {
  static const radial::RadialModel m({5, -1}, {1.0, 1.0, 6});
  return m;
}

kernels::GridSpec grid(int n) {
  kernels::GridSpec g;
  g.n1 = g.n2 = n;
  g.log_spaced = true;
  return g;
}

void BM_GridSerial(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_grid_serial(model(), g, kernels::Kind::phi, 1e-10));
  state.SetItemsProcessed(state.iterations() * g.points());
}

void BM_GridParallel(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::evaluate_grid_parallel(model(), g, kernels::Kind::phi, 1e-10));
  state.SetItemsProcessed(state.iterations() * g.points());
  state.counters["threads"] = kernels::thread_limit();
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
