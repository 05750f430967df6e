// Serial reference against the OpenMP path for each parallel kernel.

#include <benchmark/benchmark.h>

#include "pgt/geodesics.hpp"
#include "pgt/lattice.hpp"
#include "pgt/lfunctions.hpp"
#include "pgt/quad_counts.hpp"

namespace {

using pgt::Execution;

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

void BM_EtaFit(benchmark::State& state) {
  const auto grid = pgt::log_grid(1e3, 1e5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pgt::eta_fit(grid, 16, pgt::kDefaultSeed, mode(state)));
}
BENCHMARK(BM_EtaFit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LambdaProfile(benchmark::State& state) {
  const auto q = pgt::canonical_rep({3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(pgt::lambda_partial_sum_profile(q, 50000, mode(state)));
}
BENCHMARK(BM_LambdaProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SmoothedL1(benchmark::State& state) {
  const pgt::SmoothingWeights w(2e4);
  benchmark::DoNotOptimize(pgt::zagier_L1(pgt::GaussianInt{5, 2}, w));  // builds the shared ideal table
  for (auto _ : state) benchmark::DoNotOptimize(pgt::zagier_L1(pgt::GaussianInt{5, 2}, w, mode(state)));
}
BENCHMARK(BM_SmoothedL1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NormalizationSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pgt::normalization_sum(1e4, mode(state)));
}
BENCHMARK(BM_NormalizationSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GeodesicSumBuild(benchmark::State& state) {
  for (auto _ : state) {
    pgt::GeodesicSum g(1500, mode(state));
    benchmark::DoNotOptimize(g.psi(1500));
  }
}
BENCHMARK(BM_GeodesicSumBuild)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
