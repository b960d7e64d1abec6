#pragma once

#include "arkimex/split_problem.hpp"

#include <map>
#include <span>

namespace arkimex {

/// Absolute-tolerance multipliers (times the relative tolerance) per
/// component class: velocities 10, geopotential 1e5, potential temperature
/// 1e6, pressure thickness and generic 1.
std::map<ComponentClass, double> default_absolute_multipliers();

enum class InitialGuess {
  previous_step,  ///< z^(0) = q^n
  predicted,      ///< z^(0) = q^n + dt * sum_{j<i} (aE_ij fE_j + aI_ij fI_j)
};

struct NewtonConfig {
  double tolerance = 0.1;             ///< epsilon in R * ||delta|| < epsilon
  int max_iterations = 10;
  double relative_tolerance = 1e-6;
  std::map<ComponentClass, double> absolute_multipliers = default_absolute_multipliers();
  InitialGuess initial_guess = InitialGuess::previous_step;
};

/// w_k = eps_r |ref_k| + eps_r * multiplier(class_k).
std::vector<double> wrms_weights(const SplitProblem& problem, std::span<const double> reference,
                                 const NewtonConfig& config);

/// sqrt(mean((v_k / w_k)^2)).
double wrms_norm(std::span<const double> v, std::span<const double> weights);

struct NewtonResult {
  State z;
  int iterations = 0;
  double last_increment_norm = 0.0;
  double rate = 1.0;
};

/// Solves z = known + gamma f^I(t, z) by Newton's method with the Jacobian
/// re-evaluated every iteration. Stops when R ||delta||_WRMS < tolerance, with
/// R = max(0.3 R_prev, ||delta_m|| / ||delta_{m-1}||) and R = 1 on the first
/// iteration. Throws NewtonFailure when the cap is reached or an increment is
/// non-finite; SingularMatrixError propagates from the factorization.
NewtonResult solve_stage(const SplitProblem& problem, double t, double gamma,
                         std::span<const double> known, std::span<const double> guess,
                         std::span<const double> weights, const NewtonConfig& config);

}  // namespace arkimex
