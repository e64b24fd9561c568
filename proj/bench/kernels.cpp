// Serial reference vs OpenMP kernels: Z2 enumeration and orbit partition.
// Arg = worker count for the parallel variants.

#include <benchmark/benchmark.h>

#include "nacoh/cohomology.hpp"
#include "nacoh/io.hpp"

namespace {

nacoh::CrossedModulePtr module() {
  static auto m = nacoh::inn_crossed_module(
      nacoh::trivial_gamma_group(nacoh::cyclic_group(3), nacoh::symmetric_group(3)));
  return m;
}

void BM_z2_serial(benchmark::State& state) {
  auto m = module();
  for (auto _ : state) benchmark::DoNotOptimize(nacoh::enumerate_z2_crossed_serial(*m).cocycles.size());
}

void BM_z2_parallel(benchmark::State& state) {
  auto m = module();
  const nacoh::SearchOptions opts{nacoh::kDefaultBudget, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(nacoh::enumerate_z2_crossed(*m, opts).cocycles.size());
}

void BM_thin_orbits(benchmark::State& state) {
  auto m = module();
  static const auto z2 = nacoh::enumerate_z2_crossed_serial(*m);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nacoh::h2_classes(*m, z2, nacoh::H2Kind::thin, jobs).size());
}

}  // namespace

BENCHMARK(BM_z2_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_z2_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
// jobs = 1 takes the BFS reference path, > 1 the union-find edge table
BENCHMARK(BM_thin_orbits)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
