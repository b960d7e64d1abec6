#pragma once

#include "arkimex/convergence.hpp"
#include "arkimex/newton.hpp"
#include "arkimex/split_problem.hpp"
#include "arkimex/stability_scan.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arkimex {

inline constexpr int kConfigSchemaVersion = 1;

/// A problem type plus numeric parameters, e.g.
/// {"type": "acoustic_column", "levels": 32, "kappa": 0.01}.
struct ProblemSpec {
  std::string type = "split_oscillator";
  std::map<std::string, double> params;
};

std::vector<std::string> problem_types();

/// Builds a problem; throws ConfigError on an unknown type or parameter.
std::unique_ptr<SplitProblem> make_problem(const ProblemSpec& spec);

/// Family for scaling studies: the member at X multiplies the explicit
/// frequencies (ensemble, oscillators) or the advection speed (column) by X.
ProblemFamily make_family(const ProblemSpec& spec);

/// Settings shared by the CLI subcommands. Every key is optional in the file.
struct RunConfig {
  std::vector<std::string> methods;          ///< empty: the whole catalog
  ProblemSpec problem;
  double t_final = 1.0;
  std::vector<double> ladder;
  ReferenceSpec reference;
  std::optional<double> accuracy_threshold;
  std::vector<double> scales;                ///< scaling study factors; empty: no study
  bool scale_time = false;
  int substeps = 1;
  std::size_t observe_every = 1;
  int boundary_samples = 360;
  NewtonConfig newton;
  std::string output = "results";
};

/// Parses a JSON run configuration; unknown keys and wrong types raise
/// ConfigError naming the key.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace arkimex
