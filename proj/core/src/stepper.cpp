#include "arkimex/stepper.hpp"

#include "arkimex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arkimex {

State step(const ArkMethod& method, const SplitProblem& problem, double t, double dt,
           std::span<const double> q, const NewtonConfig& newton, StepDiagnostics* diagnostics) {
  const ButcherTableau& E = method.explicit_tableau;
  // A pure-explicit entry integrates f^E + f^I with its explicit tableau.
  const ButcherTableau& I = method.pure_explicit ? E : method.implicit_tableau;
  const std::size_t s = method.stages();
  const std::size_t n = q.size();
  const std::vector<bool> need_e = method.explicit_stage_needed();
  const std::vector<bool> need_i = method.pure_explicit ? need_e : method.implicit_stage_needed();

  std::vector<State> fe(s), fi(s);
  State known(n);
  std::vector<double> weights;
  if (method.implicit_solve_count() > 0) weights = wrms_weights(problem, q, newton);

  for (std::size_t i = 0; i < s; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    std::copy(q.begin(), q.end(), known.begin());
    for (std::size_t j = 0; j < i; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      const double ae = dt * E.A(ii, jj), ai = dt * I.A(ii, jj);
      if (ae != 0.0)
        for (std::size_t k = 0; k < n; ++k) known[k] += ae * fe[j][k];
      if (ai != 0.0)
        for (std::size_t k = 0; k < n; ++k) known[k] += ai * fi[j][k];
    }

    State z;
    const double aii = I.A(ii, ii);
    if (aii != 0.0) {
      std::span<const double> guess =
          newton.initial_guess == InitialGuess::predicted ? std::span<const double>(known) : q;
      NewtonResult r = solve_stage(problem, t + I.c(ii) * dt, dt * aii, known, guess, weights, newton);
      if (diagnostics) {
        ++diagnostics->implicit_solves;
        diagnostics->newton_iterations.push_back(r.iterations);
      }
      z = std::move(r.z);
    } else {
      z = known;
    }

    if (need_e[i]) {
      fe[i].resize(n);
      problem.explicit_rhs(t + E.c(ii) * dt, z, fe[i]);
      if (diagnostics) ++diagnostics->explicit_evals;
    }
    if (need_i[i]) {
      fi[i].resize(n);
      problem.implicit_rhs(t + I.c(ii) * dt, z, fi[i]);
      if (diagnostics) ++diagnostics->implicit_evals;
    }
  }

  State next(q.begin(), q.end());
  for (std::size_t i = 0; i < s; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const double be = dt * E.b(ii), bi = dt * I.b(ii);
    if (be != 0.0)
      for (std::size_t k = 0; k < n; ++k) next[k] += be * fe[i][k];
    if (bi != 0.0)
      for (std::size_t k = 0; k < n; ++k) next[k] += bi * fi[i][k];
  }
  return next;
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::unstable: return "unstable";
    case RunStatus::solver_failure: return "solver_failure";
  }
  return "unknown";
}

std::size_t step_count(double t0, double t_final, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (t_final <= t0) return 0;
  const double ratio = (t_final - t0) / dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio)) return static_cast<std::size_t>(rounded);
  return static_cast<std::size_t>(std::ceil(ratio));
}

TrajectorySummary integrate(const ArkMethod& method, const SplitProblem& problem, State q0,
                            double t0, const IntegrationOptions& opt) {
  const std::size_t nsteps = step_count(t0, opt.t_final, opt.dt);
  if (nsteps == 0) throw std::invalid_argument("integration interval is empty");
  TrajectorySummary sum;
  sum.t_reached = t0;
  const std::vector<double> w0 = wrms_weights(problem, q0, opt.newton);
  const double norm0 = wrms_norm(q0, w0);
  State q = std::move(q0);
  if (opt.observer) opt.observer(0, t0, q);
  int min_it = 0;

  for (std::size_t k = 0; k < nsteps; ++k) {
    const double t = t0 + static_cast<double>(k) * opt.dt;
    const double dt = k + 1 == nsteps ? opt.t_final - t : opt.dt;
    StepDiagnostics d;
    try {
      q = step(method, problem, t, dt, q, opt.newton, &d);
    } catch (const NumericalError& e) {
      sum.status = RunStatus::solver_failure;
      sum.cause = e.what();
      break;
    }
    const double t_new = k + 1 == nsteps ? opt.t_final : t + dt;
    if (opt.post_step) opt.post_step(q, t_new, dt);

    sum.total_implicit_solves += d.implicit_solves;
    sum.total_explicit_evals += d.explicit_evals;
    for (int it : d.newton_iterations) {
      sum.total_newton_iterations += it;
      sum.max_newton_iterations = std::max(sum.max_newton_iterations, it);
      min_it = min_it == 0 ? it : std::min(min_it, it);
    }
    sum.steps = k + 1;
    sum.t_reached = t_new;

    const bool finite = std::all_of(q.begin(), q.end(), [](double x) { return std::isfinite(x); });
    if (!finite) {
      sum.status = RunStatus::unstable;
      sum.cause = "non-finite state";
      break;
    }
    if (norm0 > 0.0 && wrms_norm(q, w0) > opt.growth_limit * norm0) {
      sum.status = RunStatus::unstable;
      sum.cause = "state norm growth beyond limit";
      break;
    }
    if (opt.observer && (sum.steps % std::max<std::size_t>(1, opt.observe_every) == 0 || k + 1 == nsteps))
      opt.observer(sum.steps, t_new, q);
  }
  sum.min_newton_iterations = min_it;
  sum.final_state = std::move(q);
  return sum;
}

}  // namespace arkimex
