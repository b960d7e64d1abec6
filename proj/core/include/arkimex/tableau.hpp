#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace arkimex {

/// Butcher tableau (A, b, c) for one half of an additive Runge-Kutta pair.
struct ButcherTableau {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;

  std::size_t stages() const { return static_cast<std::size_t>(b.size()); }
  bool is_explicit() const;               ///< strictly lower triangular
  bool is_diagonally_implicit() const;    ///< lower triangular
  bool is_zero() const;
};

/// Properties a catalog entry claims for itself; used as the certification
/// target. Index 0/1/2 of the arrays is explicit/implicit/coupled.
struct DeclaredProperties {
  std::array<int, 3> order{};
  std::array<int, 3> stage_order{};
  bool a_stable = false;
  bool l_stable = false;
  bool b_stable = false;
  bool stiffly_accurate_implicit = false;
  bool stiffly_accurate_explicit = false;
  bool shared_b = false;
  bool shared_c = false;
  double max_explicit_imag = 0.0;
};

/// An IMEX additive Runge-Kutta pair.
struct ArkMethod {
  std::string name;
  std::string reference;
  ButcherTableau explicit_tableau;
  ButcherTableau implicit_tableau;
  int declared_order = 0;
  int declared_implicit_solves = 0;
  int declared_explicit_evals = 0;
  bool pure_explicit = false;
  std::optional<DeclaredProperties> declared_properties;

  std::size_t stages() const { return explicit_tableau.stages(); }

  /// Stages whose diagonal implicit coefficient is nonzero.
  int implicit_solve_count() const;

  /// Stages at which f^E must be evaluated: b^E_j != 0 or some A^E[i][j] != 0.
  std::vector<bool> explicit_stage_needed() const;
  int explicit_eval_count() const;

  /// Stages at which f^I must be evaluated: b^I_j != 0 or some A^I[i][j] != 0, i > j.
  std::vector<bool> implicit_stage_needed() const;
};

/// Checks the structural invariants of a method and throws InvariantError on
/// the first violation: equal stage counts, explicit part strictly lower
/// triangular, implicit part lower triangular, c equal to row sums within
/// 1e-12, declared implicit-solve count equal to the number of nonzero
/// diagonal entries, pure-explicit methods carry a zero implicit tableau.
void validate(const ArkMethod& method);

/// Builds a method from one Butcher tableau used explicitly, with an all-zero
/// implicit half.
ArkMethod make_explicit_method(std::string name, ButcherTableau tableau, int order);

}  // namespace arkimex
