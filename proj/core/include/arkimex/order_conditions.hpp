#pragma once

#include "arkimex/tableau.hpp"

#include <string>
#include <vector>

namespace arkimex {

inline constexpr double kOrderConditionTolerance = 1e-12;

/// One order condition and its residual.
struct OrderCondition {
  std::string label;   ///< e.g. "b.c^2" or "bE.AI.cE"
  int order = 0;
  double residual = 0.0;
};

/// Residuals of every classical order condition up to `max_order` (<= 3).
/// Abscissae are taken as row sums A*1.
std::vector<OrderCondition> order_conditions(const ButcherTableau& t, int max_order = 3);

/// Residuals of the additive (coupled) conditions up to `max_order` (<= 3),
/// for every combination of explicit/implicit b, A and c.
std::vector<OrderCondition> coupled_order_conditions(const ArkMethod& m, int max_order = 3);

/// Largest p <= 3 such that all conditions of order <= p hold within `tol`.
int algebraic_order(const ButcherTableau& t, double tol = kOrderConditionTolerance);
int coupled_algebraic_order(const ArkMethod& m, double tol = kOrderConditionTolerance);

/// Largest q such that A c^{k-1} = c^k / k for all k <= q (within `tol`).
int stage_order(const ButcherTableau& t, double tol = kOrderConditionTolerance, int max_q = 8);

/// 0 when the explicit and implicit abscissae differ, otherwise the smaller
/// of the two stage orders.
int coupled_stage_order(const ArkMethod& m, double tol = kOrderConditionTolerance);

}  // namespace arkimex
