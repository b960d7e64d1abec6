#pragma once

#include "arkimex/stepper.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace arkimex {

/// The 16-entry ladder {10, 20, 50, ..., 320}.
std::vector<double> default_ladder_shape();

/// Scales `shape` so its largest entry equals `top`.
std::vector<double> rescale_ladder(const std::vector<double>& shape, double top);

struct ScanOptions {
  double t_final = 1.0;
  /// When set, a run also has to keep the max relative error against
  /// `reference` below this threshold.
  std::optional<double> accuracy_threshold;
  std::optional<State> reference;
  NewtonConfig newton;
  PostStep post_step;
};

struct ScanEntry {
  double dt = 0.0;
  RunStatus status = RunStatus::completed;
  bool passed = false;
  std::optional<double> error;
  std::string cause;
  int max_newton_iterations = 0;
};

struct ScanReport {
  std::string method;
  std::string problem;
  std::vector<ScanEntry> entries;
  std::optional<double> dt_max;          ///< largest passing ladder entry
  int implicit_solves = 0;               ///< per step
  int explicit_evals = 0;                ///< per step
  std::optional<double> dt_per_implicit_solve;
  std::optional<double> dt_per_explicit_eval;
};

/// Runs every ladder entry from t = 0 to options.t_final and records
/// stability (and accuracy, when a threshold is set).
ScanReport scan_max_dt(const ArkMethod& method, const SplitProblem& problem, std::vector<double> ladder,
                       const ScanOptions& options);

using ProblemFamily = std::function<std::unique_ptr<SplitProblem>(double scale)>;

struct ScalingRow {
  double scale = 1.0;
  std::optional<double> dt_max;
  std::optional<double> ratio;  ///< dt_max(X) * X / dt_max(1)
};

/// For each scale X, scans the family member at X over base_ladder / X and
/// reports dt_max(X) X / dt_max(1). With `scale_time` the integration
/// interval is also divided by X; otherwise it stays fixed. Accuracy
/// references, when a threshold is set, come from each member's exact
/// solution.
std::vector<ScalingRow> scan_scaling_sensitivity(const ArkMethod& method, const ProblemFamily& family,
                                                 const std::vector<double>& base_ladder,
                                                 const ScanOptions& options, const std::vector<double>& scales,
                                                 bool scale_time = false);

}  // namespace arkimex
