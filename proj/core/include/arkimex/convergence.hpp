#pragma once

#include "arkimex/stepper.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arkimex {

class HyperviscousOscillator;

inline constexpr double kMachineEpsilon = 2.220446049250313e-16;

/// max_k |q_k - ref_k| / (|ref_k| + eps_div)
double max_relative_error(std::span<const double> q, std::span<const double> ref, double eps_div = 1e-30);

/// Accumulated round-off estimate: machine epsilon times the step count.
double roundoff_floor(std::size_t steps);

struct ConvergencePoint {
  double dt = 0.0;
  double error = 0.0;
  std::size_t steps = 0;
  RunStatus status = RunStatus::completed;
  int max_newton_iterations = 0;
};

/// error ~ alpha dt^beta through two points (indices into the point list).
struct OrderFit {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Fits through the two smallest errors strictly above `floor` (completed
/// runs with distinct dt only). Returns nothing when fewer than two qualify.
std::optional<OrderFit> fit_order(const std::vector<ConvergencePoint>& points, double floor);

/// Reference solution at t_final: either the problem's exact solution or a
/// fine run of a reference method.
struct ReferenceSpec {
  enum class Kind { exact, fine } kind = Kind::exact;
  std::string method = "KGU35";
  double dt = 0.0;
};

struct Reference {
  State state;
  std::size_t steps = 0;  ///< steps of the fine run; 0 for an exact reference
};

/// Throws ConfigError when the problem has no exact solution or the fine run fails.
Reference compute_reference(const SplitProblem& problem, const ReferenceSpec& spec, double t_final,
                            const NewtonConfig& newton = {});

struct ConvergenceOptions {
  std::vector<double> ladder;
  double t_final = 1.0;
  NewtonConfig newton;
  PostStep post_step;
};

struct ConvergenceReport {
  std::string method;
  std::string problem;
  std::vector<ConvergencePoint> points;
  double floor = 0.0;
  std::optional<OrderFit> fit;
};

/// Runs the method at every ladder step, measures the max relative error
/// against `reference` and fits the order. The round-off floor uses the
/// reference step count, or the finest run's step count for an exact
/// reference.
ConvergenceReport run_convergence(const ArkMethod& method, const SplitProblem& problem,
                                  const Reference& reference, const ConvergenceOptions& options);

/// Convergence of the split scheme on HyperviscousOscillator against the
/// exact unsplit solution (with the problem's nu when substeps > 0, with
/// nu = 0 when substeps == 0).
ConvergenceReport run_split_floor_study(const ArkMethod& method, const HyperviscousOscillator& problem,
                                        int substeps, const ConvergenceOptions& options);

}  // namespace arkimex
