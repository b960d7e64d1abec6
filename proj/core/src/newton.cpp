#include "arkimex/newton.hpp"

#include "arkimex/errors.hpp"

#include <algorithm>
#include <cmath>

namespace arkimex {

std::map<ComponentClass, double> default_absolute_multipliers() {
  return {
      {ComponentClass::generic, 1.0},
      {ComponentClass::horizontal_velocity, 10.0},
      {ComponentClass::vertical_velocity, 10.0},
      {ComponentClass::geopotential, 1e5},
      {ComponentClass::potential_temperature, 1e6},
      {ComponentClass::pressure_thickness, 1.0},
  };
}

std::vector<double> wrms_weights(const SplitProblem& problem, std::span<const double> reference,
                                 const NewtonConfig& config) {
  const double er = config.relative_tolerance;
  std::vector<double> w(reference.size());
  for (std::size_t k = 0; k < reference.size(); ++k) {
    const auto it = config.absolute_multipliers.find(problem.component_class(k));
    const double mult = it == config.absolute_multipliers.end() ? 1.0 : it->second;
    w[k] = er * std::abs(reference[k]) + er * mult;
  }
  return w;
}

double wrms_norm(std::span<const double> v, std::span<const double> weights) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double r = v[k] / weights[k];
    s += r * r;
  }
  return std::sqrt(s / static_cast<double>(v.size()));
}

NewtonResult solve_stage(const SplitProblem& problem, double t, double gamma,
                         std::span<const double> known, std::span<const double> guess,
                         std::span<const double> weights, const NewtonConfig& config) {
  const std::size_t n = known.size();
  NewtonResult res;
  res.z.assign(guess.begin(), guess.end());
  std::vector<double> f(n), delta(n);
  double prev_norm = 0.0;
  double rate = 1.0;

  for (int m = 1; m <= config.max_iterations; ++m) {
    problem.implicit_rhs(t, res.z, f);
    for (std::size_t k = 0; k < n; ++k) delta[k] = known[k] + gamma * f[k] - res.z[k];
    const ShiftedSystem system(problem.implicit_jacobian(t, res.z), gamma);
    system.solve(delta);

    const double norm = wrms_norm(delta, weights);
    if (!std::isfinite(norm)) throw NewtonFailure(m, norm);
    for (std::size_t k = 0; k < n; ++k) res.z[k] += delta[k];
    if (m > 1) rate = std::max(0.3 * rate, prev_norm > 0.0 ? norm / prev_norm : 0.0);
    prev_norm = norm;
    res.iterations = m;
    res.last_increment_norm = norm;
    res.rate = rate;
    if (rate * norm < config.tolerance) return res;
  }
  throw NewtonFailure(config.max_iterations, res.last_increment_norm);
}

}  // namespace arkimex
