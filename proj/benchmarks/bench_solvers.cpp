#include "arkimex/models.hpp"
#include "arkimex/split_problem.hpp"
#include "arkimex/tridiagonal.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace arkimex;

static void BM_TridiagonalSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> lo(n - 1), d(n), up(n - 1), rhs(n);
  for (auto& v : lo) v = u(rng);
  for (auto& v : up) v = u(rng);
  for (auto& v : d) v = 3.0 + u(rng);
  for (auto& v : rhs) v = u(rng);
  for (auto _ : state) {
    TridiagonalLU lu(lo, d, up);
    std::vector<double> x = rhs;
    lu.solve(x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TridiagonalSolve)->RangeMultiplier(4)->Range(8, 2048)->Complexity(benchmark::oN);

// Factor and solve (I - gamma J) for the acoustic column.
static void BM_ColumnShiftedSolve(benchmark::State& state) {
  AcousticColumn col({.levels = static_cast<std::size_t>(state.range(0)), .kappa = 0.01});
  const State q = col.initial_state();
  const ImplicitJacobian jac = col.implicit_jacobian(0.0, q);
  std::vector<double> r(q.size(), 1.0);
  for (auto _ : state) {
    ShiftedSystem sys(jac, 30.0);
    std::vector<double> x = r;
    sys.solve(x);
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_ColumnShiftedSolve)->Arg(32)->Arg(128)->Arg(512);
