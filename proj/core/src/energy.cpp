#include "arkimex/energy.hpp"

#include "arkimex/errors.hpp"

#include <cmath>

namespace arkimex {

EnergyReport run_energy(const ArkMethod& method, const SplitProblem& problem, double dt, double t_final,
                        const PostStep& post_step, const NewtonConfig& newton, std::size_t observe_every) {
  const State q0 = problem.initial_state();
  const auto e0 = problem.energy(q0);
  if (!e0) throw ConfigError("problem " + problem.name() + " defines no energy");

  EnergyReport rep;
  rep.method = method.name;
  rep.problem = problem.name();
  rep.dt = dt;
  rep.post_step = static_cast<bool>(post_step);

  IntegrationOptions opt;
  opt.dt = dt;
  opt.t_final = t_final;
  opt.newton = newton;
  opt.post_step = post_step;
  opt.observe_every = observe_every;
  opt.observer = [&](std::size_t, double t, std::span<const double> q) {
    // Absolute change when E(0) = 0.
    const double diff = *problem.energy(q) - *e0;
    const double drift = *e0 != 0.0 ? diff / *e0 : diff;
    rep.samples.push_back({t, drift});
    rep.max_abs_drift = std::max(rep.max_abs_drift, std::abs(drift));
    rep.final_drift = drift;
  };
  rep.status = integrate(method, problem, q0, 0.0, opt).status;
  return rep;
}

}  // namespace arkimex
