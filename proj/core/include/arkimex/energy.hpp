#pragma once

#include "arkimex/stepper.hpp"

#include <string>
#include <vector>

namespace arkimex {

struct EnergySample {
  double t = 0.0;
  double drift = 0.0;  ///< (E(t) - E(0)) / E(0), or E(t) - E(0) when E(0) = 0
};

struct EnergyReport {
  std::string method;
  std::string problem;
  double dt = 0.0;
  bool post_step = false;
  RunStatus status = RunStatus::completed;
  std::vector<EnergySample> samples;
  double max_abs_drift = 0.0;
  double final_drift = 0.0;
};

/// Integrates and records the relative energy drift every `observe_every`
/// steps; with E(0) = 0 the absolute change E(t) - E(0) is recorded instead.
/// Throws ConfigError when the problem defines no energy.
EnergyReport run_energy(const ArkMethod& method, const SplitProblem& problem, double dt, double t_final,
                        const PostStep& post_step = {}, const NewtonConfig& newton = {},
                        std::size_t observe_every = 1);

}  // namespace arkimex
