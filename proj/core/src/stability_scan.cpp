#include "arkimex/stability_scan.hpp"

#include "arkimex/convergence.hpp"
#include "arkimex/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arkimex {

std::vector<double> default_ladder_shape() {
  return {10, 20, 50, 100, 120, 135, 150, 160, 180, 192, 200, 216, 240, 270, 300, 320};
}

std::vector<double> rescale_ladder(const std::vector<double>& shape, double top) {
  if (shape.empty()) return {};
  const double m = *std::max_element(shape.begin(), shape.end());
  std::vector<double> out(shape.size());
  std::transform(shape.begin(), shape.end(), out.begin(), [&](double v) { return v * top / m; });
  return out;
}

ScanReport scan_max_dt(const ArkMethod& method, const SplitProblem& problem, std::vector<double> ladder,
                       const ScanOptions& options) {
  std::sort(ladder.begin(), ladder.end());
  if (options.accuracy_threshold && !options.reference)
    throw ConfigError("accuracy threshold requires a reference state");
  ScanReport rep;
  rep.method = method.name;
  rep.problem = problem.name();
  rep.implicit_solves = method.implicit_solve_count();
  rep.explicit_evals = method.explicit_eval_count();
  for (double dt : ladder) {
    IntegrationOptions opt;
    opt.dt = dt;
    opt.t_final = options.t_final;
    opt.newton = options.newton;
    opt.post_step = options.post_step;
    TrajectorySummary s = integrate(method, problem, problem.initial_state(), 0.0, opt);
    ScanEntry e;
    e.dt = dt;
    e.status = s.status;
    e.cause = s.cause;
    e.max_newton_iterations = s.max_newton_iterations;
    e.passed = s.status == RunStatus::completed;
    if (e.passed && options.reference) {
      e.error = max_relative_error(s.final_state, *options.reference);
      if (options.accuracy_threshold && !(*e.error <= *options.accuracy_threshold)) {
        e.passed = false;
        e.cause = "error above accuracy threshold";
      }
    }
    if (e.passed) rep.dt_max = dt;
    rep.entries.push_back(std::move(e));
  }
  if (rep.dt_max) {
    if (rep.implicit_solves > 0) rep.dt_per_implicit_solve = *rep.dt_max / rep.implicit_solves;
    if (rep.explicit_evals > 0) rep.dt_per_explicit_eval = *rep.dt_max / rep.explicit_evals;
  }
  return rep;
}

std::vector<ScalingRow> scan_scaling_sensitivity(const ArkMethod& method, const ProblemFamily& family,
                                                 const std::vector<double>& base_ladder,
                                                 const ScanOptions& options, const std::vector<double>& scales,
                                                 bool scale_time) {
  std::vector<ScalingRow> rows;
  std::optional<double> base;
  for (double X : scales) {
    if (!(X > 0.0)) throw std::invalid_argument("scale factors must be positive");
    auto problem = family(X);
    std::vector<double> ladder(base_ladder.size());
    std::transform(base_ladder.begin(), base_ladder.end(), ladder.begin(), [&](double v) { return v / X; });
    ScanOptions opt = options;
    if (scale_time) opt.t_final = options.t_final / X;
    if (opt.accuracy_threshold) {
      auto exact = problem->exact_solution(opt.t_final);
      if (!exact) throw ConfigError("accuracy-limited scaling scan needs an exact solution");
      opt.reference = std::move(*exact);
    }
    const ScanReport rep = scan_max_dt(method, *problem, ladder, opt);
    ScalingRow row;
    row.scale = X;
    row.dt_max = rep.dt_max;
    if (X == 1.0) base = rep.dt_max;
    rows.push_back(row);
  }
  for (auto& row : rows)
    if (row.dt_max && base && *base > 0.0) row.ratio = *row.dt_max * row.scale / *base;
  return rows;
}

}  // namespace arkimex
