#include "arkimex/catalog.hpp"
#include "arkimex/models.hpp"
#include "arkimex/stepper.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace arkimex;

namespace {

const char* kMethods[] = {"ARS232", "ARS343", "DBM453", "ARK436", "ARK548"};

}  // namespace

static void BM_ColumnStep(benchmark::State& state) {
  const ArkMethod& m = get_method(kMethods[state.range(0)]);
  AcousticColumn col({.kappa = 0.01});
  State q = col.initial_state();
  for (auto& v : q) v *= 0.1;
  for (auto _ : state) {
    State next = step(m, col, 0.0, 50.0, q);
    benchmark::DoNotOptimize(next.data());
  }
  state.SetLabel(m.name);
}
BENCHMARK(BM_ColumnStep)->DenseRange(0, 4);

static void BM_EnsembleStep(benchmark::State& state) {
  const ArkMethod& m = get_method(kMethods[state.range(0)]);
  OscillatorEnsemble ens({.implicit_share = 0.5});
  const State q = ens.initial_state();
  for (auto _ : state) {
    State next = step(m, ens, 0.0, 0.5, q);
    benchmark::DoNotOptimize(next.data());
  }
  state.SetLabel(m.name);
}
BENCHMARK(BM_EnsembleStep)->DenseRange(0, 4);
