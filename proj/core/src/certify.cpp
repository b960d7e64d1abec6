#include "arkimex/certify.hpp"

#include "arkimex/convergence.hpp"
#include "arkimex/models.hpp"
#include "arkimex/order_conditions.hpp"
#include "arkimex/stability.hpp"

#include <algorithm>
#include <cmath>

namespace arkimex {

double empirical_slope(const ArkMethod& method, double omega_explicit, double omega_implicit) {
  const NonlinearRotor rotor(omega_explicit, omega_implicit);
  ConvergenceOptions opt;
  opt.t_final = 2.0;
  opt.ladder = {0.1, 0.05, 0.025};
  NewtonConfig newton;
  newton.tolerance = 1e-8;
  newton.max_iterations = 50;
  opt.newton = newton;
  const Reference ref{*rotor.exact_solution(opt.t_final), 0};
  const ConvergenceReport rep = run_convergence(method, rotor, ref, opt);
  return rep.fit ? rep.fit->beta : 0.0;
}

namespace {

int certified_order(int algebraic, const std::optional<double>& slope) {
  if (algebraic < 3 || !slope || *slope < 3.5) return algebraic;
  return std::max(3, static_cast<int>(std::lround(*slope)));
}

}  // namespace

PropertyReport certify(const ArkMethod& m, const CertifyOptions& options) {
  const ButcherTableau& E = m.explicit_tableau;
  const ButcherTableau& I = m.implicit_tableau;
  PropertyReport r;
  r.name = m.name;
  r.stages = m.stages();
  r.pure_explicit = m.pure_explicit;
  r.implicit_solves = m.implicit_solve_count();
  r.explicit_evals = m.explicit_eval_count();

  r.algebraic_order[0] = algebraic_order(E);
  r.algebraic_order[1] = m.pure_explicit ? r.algebraic_order[0] : algebraic_order(I);
  r.algebraic_order[2] = m.pure_explicit ? r.algebraic_order[0] : coupled_algebraic_order(m);
  if (m.pure_explicit) {
    for (const auto& c : order_conditions(E, 3))
      r.max_order3_residual = std::max(r.max_order3_residual, std::abs(c.residual));
  } else {
    for (const auto& c : coupled_order_conditions(m, 3))
      r.max_order3_residual = std::max(r.max_order3_residual, std::abs(c.residual));
  }

  if (options.empirical && r.algebraic_order[0] == 3)
    r.empirical_slope[0] = empirical_slope(m, 1.0, 0.0);
  if (options.empirical && !m.pure_explicit && r.algebraic_order[1] == 3)
    r.empirical_slope[1] = empirical_slope(m, 0.0, 1.0);
  if (options.empirical && !m.pure_explicit && r.algebraic_order[2] == 3)
    r.empirical_slope[2] = empirical_slope(m, 1.0, 1.0);
  for (int k = 0; k < 3; ++k) r.order[k] = certified_order(r.algebraic_order[k], r.empirical_slope[k]);
  if (m.pure_explicit) r.order[1] = r.order[2] = r.order[0];

  r.stage_order[0] = stage_order(E);
  if (!m.pure_explicit) {
    r.stage_order[1] = stage_order(I);
    r.stage_order[2] = coupled_stage_order(m);
    const AStabilityResult a = check_a_stability(I);
    r.a_stable = a.a_stable;
    r.max_modulus_imag_axis = a.max_modulus;
    r.l_stable = r.a_stable && is_l_stable(I);
    const AlgebraicStabilityResult b = check_algebraic_stability(I);
    r.b_stable = b.certified;
    r.algebraic_min_eigenvalue = b.min_eigenvalue;
    r.stiffly_accurate_implicit = is_stiffly_accurate(I);
  } else {
    r.stage_order[1] = r.stage_order[2] = r.stage_order[0];
  }
  r.stiffly_accurate_explicit = is_stiffly_accurate(E);
  r.shared_b = (E.b - I.b).cwiseAbs().maxCoeff() <= 1e-13;
  r.shared_c = (E.c - I.c).cwiseAbs().maxCoeff() <= 1e-13;
  r.max_explicit_imag = max_imag_stable_step(E);
  return r;
}

namespace {

std::string str(bool b) { return b ? "yes" : "no"; }

}  // namespace

Comparison compare(const PropertyReport& r, const DeclaredProperties& d) {
  Comparison c;
  static const char* parts[3] = {"explicit", "implicit", "coupled"};
  for (int k = 0; k < 3; ++k) {
    if (r.order[k] != d.order[k])
      c.mismatches.push_back({std::string("order_") + parts[k], std::to_string(d.order[k]), std::to_string(r.order[k])});
    if (r.stage_order[k] != d.stage_order[k])
      c.mismatches.push_back({std::string("stage_order_") + parts[k], std::to_string(d.stage_order[k]),
                              std::to_string(r.stage_order[k])});
  }
  auto flag = [&](const char* field, bool expected, bool actual) {
    if (expected != actual) c.mismatches.push_back({field, str(expected), str(actual)});
  };
  flag("a_stable", d.a_stable, r.a_stable);
  flag("l_stable", d.l_stable, r.l_stable);
  if (d.b_stable && !r.b_stable)
    c.b_indeterminate = true;
  else
    flag("b_stable", d.b_stable, r.b_stable);
  flag("stiffly_accurate_implicit", d.stiffly_accurate_implicit, r.stiffly_accurate_implicit);
  flag("stiffly_accurate_explicit", d.stiffly_accurate_explicit, r.stiffly_accurate_explicit);
  flag("shared_b", d.shared_b, r.shared_b);
  flag("shared_c", d.shared_c, r.shared_c);
  if (std::abs(r.max_explicit_imag - d.max_explicit_imag) > 0.05)
    c.mismatches.push_back({"max_explicit_imag", std::to_string(d.max_explicit_imag), std::to_string(r.max_explicit_imag)});
  return c;
}

}  // namespace arkimex
