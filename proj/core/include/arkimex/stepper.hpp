#pragma once

#include "arkimex/newton.hpp"
#include "arkimex/split_problem.hpp"
#include "arkimex/tableau.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace arkimex {

/// Work performed in one step.
struct StepDiagnostics {
  int implicit_solves = 0;
  int explicit_evals = 0;
  int implicit_evals = 0;
  std::vector<int> newton_iterations;  ///< one entry per implicit solve
};

/// Advances q^n to q^{n+1} with one ARK step:
///   z_i = q^n + dt sum_{j<i} aE_ij fE(z_j) + dt sum_{j<=i} aI_ij fI(z_j)
///   q^{n+1} = q^n + dt sum_i (bE_i fE(z_i) + bI_i fI(z_i))
/// f^E and f^I use their own abscissae. Stages with aI_ii = 0 skip the
/// Newton solve. The input is never modified; errors propagate.
/// Pure-explicit methods apply the explicit tableau to f^E + f^I.
State step(const ArkMethod& method, const SplitProblem& problem, double t, double dt,
           std::span<const double> q, const NewtonConfig& newton = {},
           StepDiagnostics* diagnostics = nullptr);

/// Called after each completed step with (state, t_new, dt); may modify the state.
using PostStep = std::function<void(std::span<double>, double, double)>;

/// Called with (step index, t, state) every `observe_every` steps and at t0.
using Observer = std::function<void(std::size_t, double, std::span<const double>)>;

struct IntegrationOptions {
  double dt = 0.0;
  double t_final = 0.0;
  NewtonConfig newton;
  PostStep post_step;
  Observer observer;
  std::size_t observe_every = 1;
  double growth_limit = 1e8;  ///< WRMS growth factor flagged as instability
};

enum class RunStatus { completed, unstable, solver_failure };

const char* to_string(RunStatus s);

struct TrajectorySummary {
  RunStatus status = RunStatus::completed;
  State final_state;
  double t_reached = 0.0;
  std::size_t steps = 0;
  std::string cause;
  long total_implicit_solves = 0;
  long total_explicit_evals = 0;
  long total_newton_iterations = 0;
  int max_newton_iterations = 0;
  int min_newton_iterations = 0;
};

/// Integrates from (t0, q0) to options.t_final with fixed steps; the last
/// step is shortened to land on t_final. Instability (non-finite values or
/// WRMS growth beyond growth_limit relative to q0) and solver failures end
/// the run early and are reported in the summary rather than thrown. An empty
/// interval (no steps) throws std::invalid_argument.
TrajectorySummary integrate(const ArkMethod& method, const SplitProblem& problem, State q0,
                            double t0, const IntegrationOptions& options);

/// Number of steps integrate() takes for the interval.
std::size_t step_count(double t0, double t_final, double dt);

}  // namespace arkimex
