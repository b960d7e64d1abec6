#include "arkimex/catalog.hpp"
#include "arkimex/certify.hpp"
#include "arkimex/stability.hpp"

#include <benchmark/benchmark.h>

using namespace arkimex;

// Algebraic checks only; the empirical order runs dominate otherwise.
static void BM_CertifyAlgebraic(benchmark::State& state) {
  const ArkMethod& m = get_method("DBM453");
  for (auto _ : state) benchmark::DoNotOptimize(certify(m, {.empirical = false}));
}
BENCHMARK(BM_CertifyAlgebraic);

static void BM_CertifyCatalog(benchmark::State& state) {
  for (auto _ : state)
    for (const ArkMethod& m : builtin_catalog()) benchmark::DoNotOptimize(certify(m));
}
BENCHMARK(BM_CertifyCatalog)->Unit(benchmark::kMillisecond);

static void BM_MaxImagStableStep(benchmark::State& state) {
  const ButcherTableau& t = get_method("DBM453").explicit_tableau;
  for (auto _ : state) benchmark::DoNotOptimize(max_imag_stable_step(t));
}
BENCHMARK(BM_MaxImagStableStep)->Unit(benchmark::kMillisecond);

static void BM_StabilityBoundary(benchmark::State& state) {
  const ButcherTableau& t = get_method("ARK436").explicit_tableau;
  for (auto _ : state) benchmark::DoNotOptimize(stability_boundary(t, 360));
}
BENCHMARK(BM_StabilityBoundary)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
