#include "arkimex/catalog.hpp"
#include "arkimex/certify.hpp"
#include "arkimex/errors.hpp"
#include "arkimex/models.hpp"
#include "arkimex/stepper.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace arkimex;

TEST(Step, ZeroRhsLeavesStateBitwise) {
  SplitOscillator zero(0.0, 0.0, {0.8, 0.6});
  const State q = {0.8, 0.6};
  for (const auto& m : builtin_catalog()) EXPECT_EQ(step(m, zero, 0.0, 0.5, q), q) << m.name;
}

TEST(Step, DiagnosticsCountWork) {
  SplitOscillator osc(1.0, 10.0, {0.8, 0.6});
  const State q = {0.8, 0.6};
  for (const auto& m : builtin_catalog()) {
    StepDiagnostics d;
    step(m, osc, 0.0, 0.01, q, {}, &d);
    EXPECT_EQ(d.implicit_solves, m.declared_implicit_solves) << m.name;
    EXPECT_EQ(d.explicit_evals, m.explicit_eval_count()) << m.name;
    EXPECT_EQ(d.newton_iterations.size(), static_cast<std::size_t>(d.implicit_solves));
  }
  StepDiagnostics d;
  step(get_method("KGU35"), osc, 0.0, 0.01, q, {}, &d);
  EXPECT_EQ(d.implicit_solves, 0);
  EXPECT_EQ(d.explicit_evals, 5);
}

TEST(Step, ZeroImplicitPartEqualsExplicitRk) {
  oracle::ExplicitOnly p;
  const State q = p.initial_state();
  for (const auto& m : builtin_catalog()) {
    const State a = step(m, p, 0.2, 0.1, q);
    const State b = oracle::explicit_rk_step(m.explicit_tableau, p, 0.2, 0.1, q);
    for (std::size_t k = 0; k < q.size(); ++k)
      EXPECT_LE(std::abs(a[k] - b[k]), 1e-14 * std::abs(b[k])) << m.name << " component " << k;
  }
}

TEST(Step, SharedWeightsConserveLinearInvariant) {
  oracle::ExchangeProblem p;
  NewtonConfig cfg;
  cfg.tolerance = 1e-6;
  int conserving = 0;
  for (const auto& m : builtin_catalog()) {
    const bool shared = certify(m, {.empirical = false}).shared_b;
    State q = p.initial_state();
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
      const State next = step(m, p, 0.05 * n, 0.05, q, cfg);
      worst = std::max(worst, std::abs((next[0] + next[1]) - (q[0] + q[1])));
      q = next;
    }
    if (m.pure_explicit) continue;  // zero implicit half: f^I never enters the update
    if (shared) {
      EXPECT_LE(worst, 1e-12) << m.name;
      ++conserving;
    } else {
      EXPECT_GT(worst, 1e-8) << m.name << " should not conserve the invariant";
    }
  }
  EXPECT_GE(conserving, 10);
}

TEST(Step, Dbm453LocalErrorIsFourthOrder) {
  SplitOscillator osc(1.0, 10.0, {0.8, 0.6});
  const ArkMethod& m = get_method("DBM453");
  NewtonConfig cfg;
  cfg.tolerance = 1e-10;
  auto local_error = [&](double dt) {
    const State q1 = step(m, osc, 0.0, dt, osc.initial_state(), cfg);
    const State ex = *osc.exact_solution(dt);
    return std::hypot(q1[0] - ex[0], q1[1] - ex[1]);
  };
  const double e1 = local_error(1e-2), e2 = local_error(5e-3);
  const double slope = std::log2(e1 / e2);
  EXPECT_NEAR(slope, 4.0, 0.3);
  // C estimated from the halved step bounds the full step.
  const double C = e2 / std::pow(5e-3, 4);
  EXPECT_LE(e1, 1.5 * C * std::pow(1e-2, 4));
}

TEST(Step, NeverModifiesInput) {
  SplitOscillator osc(1.0, 10.0, {0.8, 0.6});
  const State q = {0.8, 0.6};
  State copy = q;
  step(get_method("ARK436"), osc, 0.0, 0.1, copy);
  EXPECT_EQ(copy, q);
}

TEST(Integrate, StepCountAndLastStep) {
  EXPECT_EQ(step_count(0.0, 1.0, 0.1), 10u);
  EXPECT_EQ(step_count(0.0, 1.0, 0.3), 4u);
  EXPECT_EQ(step_count(0.0, 0.0, 0.3), 0u);
  EXPECT_THROW(step_count(0.0, 1.0, 0.0), std::invalid_argument);

  SplitOscillator osc(1.0, 10.0, {0.8, 0.6});
  IntegrationOptions o;
  o.dt = 0.3;
  o.t_final = 1.0;
  std::vector<double> times;
  o.observer = [&](std::size_t, double t, std::span<const double>) { times.push_back(t); };
  int post = 0;
  o.post_step = [&](std::span<double>, double, double) { ++post; };
  const auto s = integrate(get_method("ARS343"), osc, osc.initial_state(), 0.0, o);
  EXPECT_EQ(s.status, RunStatus::completed);
  EXPECT_EQ(s.steps, 4u);
  EXPECT_EQ(post, 4);
  EXPECT_EQ(s.t_reached, 1.0);
  ASSERT_EQ(times.size(), 5u);
  EXPECT_EQ(times.front(), 0.0);
  EXPECT_EQ(times.back(), 1.0);
  EXPECT_EQ(s.total_implicit_solves, 12);
}

TEST(Integrate, EmptyIntervalIsAnError) {
  SplitOscillator osc(1.0, 10.0, {0.8, 0.6});
  IntegrationOptions o;
  o.dt = 0.1;
  o.t_final = 0.0;
  EXPECT_THROW(integrate(get_method("ARS232"), osc, osc.initial_state(), 0.0, o), std::invalid_argument);
}

TEST(Integrate, FlagsExplicitInstability) {
  // Explicit eigenvalue times dt is 2.0, beyond the 1.73 limit of ARS232.
  SplitOscillator osc(1.0, 0.0, {0.8, 0.6});
  IntegrationOptions o;
  o.dt = 2.0;
  o.t_final = 20000.0;
  const auto s = integrate(get_method("ARS232"), osc, osc.initial_state(), 0.0, o);
  EXPECT_EQ(s.status, RunStatus::unstable);
  EXPECT_LT(s.steps, 10000u);
  EXPECT_FALSE(s.cause.empty());

  o.dt = 1.7;
  o.t_final = 1700.0;
  EXPECT_EQ(integrate(get_method("ARS232"), osc, osc.initial_state(), 0.0, o).status, RunStatus::completed);
}

TEST(Integrate, ReportsSolverFailure) {
  NonlinearRotor rotor(0.0, 50.0, {0.8, 0.6});
  IntegrationOptions o;
  o.dt = 1.0;
  o.t_final = 5.0;
  o.newton.max_iterations = 1;
  const auto s = integrate(get_method("ARS343"), rotor, rotor.initial_state(), 0.0, o);
  EXPECT_EQ(s.status, RunStatus::solver_failure);
  EXPECT_EQ(s.steps, 0u);
  EXPECT_STREQ(to_string(s.status), "solver_failure");
}

TEST(Integrate, DeterministicAcrossRuns) {
  OscillatorEnsemble e({.implicit_share = 0.5, .seed = 9});
  IntegrationOptions o;
  o.dt = 0.25;
  o.t_final = 10.0;
  const auto a = integrate(get_method("DBM453"), e, e.initial_state(), 0.0, o);
  const auto b = integrate(get_method("DBM453"), e, e.initial_state(), 0.0, o);
  EXPECT_EQ(a.final_state, b.final_state);
  EXPECT_EQ(a.total_newton_iterations, b.total_newton_iterations);
}
