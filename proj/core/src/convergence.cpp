#include "arkimex/convergence.hpp"

#include "arkimex/catalog.hpp"
#include "arkimex/errors.hpp"
#include "arkimex/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace arkimex {

double max_relative_error(std::span<const double> q, std::span<const double> ref, double eps_div) {
  double e = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double r = std::abs(q[k] - ref[k]) / (std::abs(ref[k]) + eps_div);
    if (std::isnan(r)) return r;
    e = std::max(e, r);
  }
  return e;
}

double roundoff_floor(std::size_t steps) { return kMachineEpsilon * static_cast<double>(steps); }

std::optional<OrderFit> fit_order(const std::vector<ConvergencePoint>& points, double floor) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.status == RunStatus::completed && std::isfinite(p.error) && p.error > floor && p.dt > 0.0)
      idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return points[a].error < points[b].error; });
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const auto& p1 = points[idx[a]];
      const auto& p2 = points[idx[b]];
      if (p1.dt == p2.dt) continue;
      OrderFit f;
      f.beta = std::log(p1.error / p2.error) / std::log(p1.dt / p2.dt);
      f.alpha = p1.error / std::pow(p1.dt, f.beta);
      f.first = idx[a];
      f.second = idx[b];
      return f;
    }
  }
  return std::nullopt;
}

Reference compute_reference(const SplitProblem& problem, const ReferenceSpec& spec, double t_final,
                            const NewtonConfig& newton) {
  Reference ref;
  if (spec.kind == ReferenceSpec::Kind::exact) {
    auto exact = problem.exact_solution(t_final);
    if (!exact) throw ConfigError("problem " + problem.name() + " has no exact solution");
    ref.state = std::move(*exact);
    return ref;
  }
  if (!(spec.dt > 0.0)) throw ConfigError("fine reference needs a positive dt");
  const ArkMethod& m = get_method(spec.method);
  IntegrationOptions opt;
  opt.dt = spec.dt;
  opt.t_final = t_final;
  opt.newton = newton;
  TrajectorySummary s = integrate(m, problem, problem.initial_state(), 0.0, opt);
  if (s.status != RunStatus::completed)
    throw ConfigError("reference run with " + spec.method + " failed: " + s.cause);
  ref.state = std::move(s.final_state);
  ref.steps = s.steps;
  return ref;
}

ConvergenceReport run_convergence(const ArkMethod& method, const SplitProblem& problem,
                                  const Reference& reference, const ConvergenceOptions& options) {
  ConvergenceReport rep;
  rep.method = method.name;
  rep.problem = problem.name();
  std::size_t finest = 0;
  for (double dt : options.ladder) {
    IntegrationOptions opt;
    opt.dt = dt;
    opt.t_final = options.t_final;
    opt.newton = options.newton;
    opt.post_step = options.post_step;
    TrajectorySummary s = integrate(method, problem, problem.initial_state(), 0.0, opt);
    ConvergencePoint p;
    p.dt = dt;
    p.steps = s.steps;
    p.status = s.status;
    p.max_newton_iterations = s.max_newton_iterations;
    p.error = s.status == RunStatus::completed ? max_relative_error(s.final_state, reference.state)
                                               : std::numeric_limits<double>::infinity();
    finest = std::max(finest, step_count(0.0, options.t_final, dt));
    rep.points.push_back(p);
  }
  rep.floor = roundoff_floor(reference.steps > 0 ? reference.steps : finest);
  rep.fit = fit_order(rep.points, rep.floor);
  return rep;
}

ConvergenceReport run_split_floor_study(const ArkMethod& method, const HyperviscousOscillator& problem,
                                        int substeps, const ConvergenceOptions& options) {
  HyperviscousOscillator::Params p = problem.params();
  if (substeps == 0) p.nu = 0.0;
  const HyperviscousOscillator target(p);
  Reference ref;
  ref.state = *target.exact_solution(options.t_final);
  ConvergenceOptions opt = options;
  opt.post_step = target.post_step(substeps);
  ConvergenceReport rep = run_convergence(method, target, ref, opt);
  rep.problem = target.name() + "(K=" + std::to_string(substeps) + ")";
  return rep;
}

}  // namespace arkimex
