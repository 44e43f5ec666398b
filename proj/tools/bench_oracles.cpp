// Throughput comparison of the serial reference oracles against the
// OpenMP kernels used by default.

#include <benchmark/benchmark.h>

#include "tspsurf/oracles.hpp"

using namespace tspsurf;

static void BM_BruteForceTsp_Serial(benchmark::State& state) {
  auto inst = gen_random(static_cast<int>(state.range(0)), 42,
                         RandomMode::EUCLIDEAN);
  for (auto _ : state) {
    auto tour = brute_force_tsp_serial(inst);
    benchmark::DoNotOptimize(tour.length);
  }
}
BENCHMARK(BM_BruteForceTsp_Serial)->Arg(9)->Arg(10)->Arg(11)
    ->Unit(benchmark::kMillisecond);

static void BM_BruteForceTsp_OpenMP(benchmark::State& state) {
  auto inst = gen_random(static_cast<int>(state.range(0)), 42,
                         RandomMode::EUCLIDEAN);
  for (auto _ : state) {
    auto tour = brute_force_tsp(inst);
    benchmark::DoNotOptimize(tour.length);
  }
}
BENCHMARK(BM_BruteForceTsp_OpenMP)->Arg(9)->Arg(10)->Arg(11)
    ->Unit(benchmark::kMillisecond);

static void BM_BruteForceSurface_Serial(benchmark::State& state) {
  auto inst = gen_random(static_cast<int>(state.range(0)), 7,
                         RandomMode::EUCLIDEAN);
  auto ts = complete_complex(inst);
  for (auto _ : state) {
    auto best = brute_force_surface_serial(inst, ts);
    benchmark::DoNotOptimize(best->boundary_length);
  }
}
BENCHMARK(BM_BruteForceSurface_Serial)->Arg(6)->Arg(7)
    ->Unit(benchmark::kMillisecond);

static void BM_BruteForceSurface_OpenMP(benchmark::State& state) {
  auto inst = gen_random(static_cast<int>(state.range(0)), 7,
                         RandomMode::EUCLIDEAN);
  auto ts = complete_complex(inst);
  for (auto _ : state) {
    auto best = brute_force_surface(inst, ts);
    benchmark::DoNotOptimize(best->boundary_length);
  }
}
BENCHMARK(BM_BruteForceSurface_OpenMP)->Arg(6)->Arg(7)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
