#include "arkimex/errors.hpp"
#include "arkimex/models.hpp"
#include "arkimex/newton.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace arkimex;

TEST(Wrms, Examples) {
  const std::vector<double> w = {0.5, 2.0};
  EXPECT_EQ(wrms_norm(std::vector<double>{0.0, 0.0}, w), 0.0);
  EXPECT_DOUBLE_EQ(wrms_norm(w, w), 1.0);
  EXPECT_DOUBLE_EQ(wrms_norm(std::vector<double>{1.0, 0.0}, w), std::sqrt(2.0));
  EXPECT_EQ(wrms_norm(std::vector<double>{}, std::vector<double>{}), 0.0);
}

TEST(Wrms, WeightsUseComponentClasses) {
  AcousticColumn col({.levels = 4});
  const State q = {2.0, -3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  NewtonConfig cfg;
  const auto w = wrms_weights(col, q, cfg);
  EXPECT_DOUBLE_EQ(w[0], 1e-6 * 2.0 + 1e-6 * 1e5);  // geopotential
  EXPECT_DOUBLE_EQ(w[1], 1e-6 * 3.0 + 1e-6 * 10.0);  // vertical velocity
  const auto m = default_absolute_multipliers();
  EXPECT_EQ(m.at(ComponentClass::potential_temperature), 1e6);
  EXPECT_EQ(m.at(ComponentClass::horizontal_velocity), 10.0);
  EXPECT_EQ(m.at(ComponentClass::pressure_thickness), 1.0);
}

namespace {

NewtonResult solve(const SplitProblem& p, double gamma, const State& known, const State& guess,
                   const NewtonConfig& cfg) {
  const auto w = wrms_weights(p, guess, cfg);
  return solve_stage(p, 0.0, gamma, known, guess, w, cfg);
}

}  // namespace

TEST(Newton, LinearResidualConvergesInOneTrueStep) {
  SplitOscillator osc(1.0, 10.0, {0.8, 0.6});
  const State q = {0.8, 0.6};
  NewtonConfig cfg;
  cfg.max_iterations = 1;
  double first = 0.0;
  try {
    solve(osc, 0.05, q, q, cfg);
    FAIL() << "one iteration cannot satisfy the test with R = 1";
  } catch (const NewtonFailure& e) {
    first = e.last_increment_norm();
    EXPECT_EQ(e.iterations(), 1);
  }
  cfg.max_iterations = 10;
  const NewtonResult r = solve(osc, 0.05, q, q, cfg);
  EXPECT_EQ(r.iterations, 2);
  EXPECT_LE(r.last_increment_norm, 1e-12 * first);

  // z = q + gamma w J z: dense oracle.
  const double g = 0.05 * 10.0;
  Eigen::Matrix2d M;
  M << 1.0, g, -g, 1.0;
  const Eigen::Vector2d z = M.lu().solve(Eigen::Vector2d(0.8, 0.6));
  EXPECT_NEAR(r.z[0], z(0), 1e-15);
  EXPECT_NEAR(r.z[1], z(1), 1e-15);
}

TEST(Newton, ZeroImplicitPartWithPredictedGuess) {
  SplitOscillator osc(1.0, 0.0, {0.8, 0.6});
  const State known = {0.7, 0.65};
  NewtonConfig cfg;
  const NewtonResult r = solve(osc, 0.3, known, known, cfg);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_EQ(r.last_increment_norm, 0.0);
  EXPECT_EQ(r.z, known);

  // From q^n the first increment lands on the predicted value; the second is zero.
  const NewtonResult r2 = solve(osc, 0.3, known, {0.8, 0.6}, cfg);
  EXPECT_EQ(r2.iterations, 2);
  EXPECT_EQ(r2.z, known);
}

TEST(Newton, NonlinearColumnConverges) {
  AcousticColumn::Params p;
  p.kappa = 0.01;
  AcousticColumn base(p);
  State q0 = base.initial_state();
  for (auto& x : q0) x *= 0.1;
  AcousticColumn col(p, q0);
  NewtonConfig cfg;
  const NewtonResult r = solve(col, 30.0, q0, q0, cfg);
  EXPECT_GE(r.iterations, 2);
  EXPECT_LE(r.iterations, 4);
  // Residual of the stage equation.
  State f(q0.size());
  col.implicit_rhs(0.0, r.z, f);
  double res = 0.0;
  for (std::size_t k = 0; k < q0.size(); ++k) res = std::max(res, std::abs(r.z[k] - q0[k] - 30.0 * f[k]));
  EXPECT_LT(res, 1e-4);
}

TEST(Newton, FailureAfterCap) {
  NonlinearRotor rotor(0.0, 50.0, {0.8, 0.6});
  const State q = {0.8, 0.6};
  NewtonConfig cfg;
  cfg.max_iterations = 2;
  cfg.tolerance = 1e-12;
  try {
    solve(rotor, 1.0, q, q, cfg);
    FAIL() << "expected NewtonFailure";
  } catch (const NewtonFailure& e) {
    EXPECT_EQ(e.iterations(), 2);
    EXPECT_GT(e.last_increment_norm(), 0.0);
  }
}

TEST(Newton, NonFiniteIncrementFails) {
  SplitOscillator osc(0.0, 1.0, {0.8, 0.6});
  const State known = {std::numeric_limits<double>::quiet_NaN(), 0.0};
  const State guess = {0.8, 0.6};
  NewtonConfig cfg;
  const auto w = wrms_weights(osc, guess, cfg);
  EXPECT_THROW(solve_stage(osc, 0.0, 0.1, known, guess, w, cfg), NewtonFailure);
}
