#include <benchmark/benchmark.h>

#include "dp2/intersect/intersect.hpp"
#include "dp2/ladder/ladder.hpp"
#include "dp2/links/links.hpp"

using namespace dp2;

namespace {

FibrationModel small_model() {
  FibrationModel m;
  m.weights = {0, 0, 0, 1};
  m.equation = parse_poly("u*w^2 + v*w^2 + u*x^4 + v*y^4 + u*z^4", scroll_vars());
  return m;
}

FibrationModel four_fibers() {
  FibrationModel m;
  m.weights = {0, 0, 0, 4};
  m.equation = parse_poly("(u^4 - 5*u^2*v^2 + 4*v^4)*w^2 + (u^2 + v^2)*(x^2 + y^2 + z^2)*w + u^4*x^4 + v^4*y^4 + "
                          "(u^4 + v^4)*z^4 + u^2*v^2*x^2*y^2",
                          scroll_vars());
  return m;
}

const SweepGrid kGrid{0, 2, 2, -2, 4, 1, 12, -3, 3};

}  // namespace

static void BM_SweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sameint_sweep_serial(kGrid));
}
static void BM_SweepParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sameint_sweep_parallel(kGrid));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

static void BM_QuasiSmoothSerial(benchmark::State& st) {
  FibrationModel m = small_model();
  for (auto _ : st) benchmark::DoNotOptimize(quasi_smooth_serial(m, GroebnerOptions{}));
}
static void BM_QuasiSmoothParallel(benchmark::State& st) {
  FibrationModel m = small_model();
  for (auto _ : st) benchmark::DoNotOptimize(quasi_smooth(m, GroebnerOptions{}));
}
BENCHMARK(BM_QuasiSmoothSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuasiSmoothParallel)->Unit(benchmark::kMillisecond);

static void BM_AllModelsSerial(benchmark::State& st) {
  FibrationModel m = four_fibers();
  for (auto _ : st) benchmark::DoNotOptimize(all_models_serial(m));
}
static void BM_AllModelsParallel(benchmark::State& st) {
  FibrationModel m = four_fibers();
  for (auto _ : st) benchmark::DoNotOptimize(all_models(m));
}
BENCHMARK(BM_AllModelsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllModelsParallel)->Unit(benchmark::kMillisecond);

static void BM_CaseFuzzSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fuzz_case_serial(Case::B, 2000, 11));
}
static void BM_CaseFuzzParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fuzz_case(Case::B, 2000, 11));
}
BENCHMARK(BM_CaseFuzzSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CaseFuzzParallel)->Unit(benchmark::kMillisecond);

static void BM_DominanceSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(dominance_violations_serial(5000, 3, 8));
}
static void BM_DominanceParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(dominance_violations(5000, 3, 8));
}
BENCHMARK(BM_DominanceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DominanceParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
