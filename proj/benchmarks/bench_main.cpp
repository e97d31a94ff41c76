#include <benchmark/benchmark.h>

#include "aho2d/krylovrr.hpp"
#include "aho2d/momentpt.hpp"
#include "aho2d/spectrumpt.hpp"

namespace aho {
namespace {

KrylovConfig ground(int K, const Rational& lambda) {
  KrylovConfig cfg;
  cfg.K = K;
  cfg.params = {0, 0, 1, lambda};
  return cfg;
}

void BM_KrylovMatrices(benchmark::State& state) {
  const KrylovConfig cfg = ground(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(krylov_matrices(cfg));
}
BENCHMARK(BM_KrylovMatrices)->Arg(8)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RitzValues(benchmark::State& state) {
  KrylovConfig cfg = ground(static_cast<int>(state.range(0)), 1);
  cfg.escalate = false;
  cfg.precision_bits = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(rr_eigenvalues(cfg));
}
BENCHMARK(BM_RitzValues)->Arg(8)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_GroundSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_series({GroupName::C4v, IrrepLabel::A1, 0}, 0, 0, 1, order));
}
BENCHMARK(BM_GroundSeries)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_FirstOrderLevels(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(first_order_levels(1, 2, Rational(3, 7), nmax));
}
BENCHMARK(BM_FirstOrderLevels)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace aho

BENCHMARK_MAIN();
