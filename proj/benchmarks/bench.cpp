#include <benchmark/benchmark.h>

#include <random>

#include "lwq/energy.hpp"
#include "lwq/regions.hpp"
#include "lwq/scheme2d.hpp"

namespace {

lwq::Field2D random_field(int n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  lwq::Field2D u(n, n);
  for (int j = 0; j < n - 3; ++j)
    for (int k = 0; k < n - 3; ++k) u.at(j, k) = d(rng);
  u.fill_ghosts();
  return u;
}

void BM_Step2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lwq::Field2D u = random_field(n);
  const lwq::CflPair cfl = lwq::CflPair::from_courant(-0.2, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lwq::step_2d(u, cfl));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Step2D)->Arg(64)->Arg(256)->Arg(1024);

void BM_Breakdown(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lwq::Field2D u = random_field(n);
  const lwq::CflPair cfl = lwq::CflPair::from_courant(-0.2, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lwq::breakdown(u, cfl));
  }
}
BENCHMARK(BM_Breakdown)->Arg(64)->Arg(256);

void BM_SweepCorner(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lwq::sweep(res, lwq::SweepKind::corner));
  }
}
BENCHMARK(BM_SweepCorner)->Arg(64)->Arg(256);

void BM_SweepBoundary(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lwq::sweep(res, lwq::SweepKind::boundary));
  }
}
BENCHMARK(BM_SweepBoundary)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
