#pragma once

#include "arkimex/tableau.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace arkimex {

/// Computed properties of one method. Arrays are indexed explicit/implicit/coupled.
struct PropertyReport {
  std::string name;
  std::size_t stages = 0;
  bool pure_explicit = false;
  int implicit_solves = 0;
  int explicit_evals = 0;

  std::array<int, 3> order{};            ///< certified order
  std::array<int, 3> algebraic_order{};  ///< from conditions up to order 3
  std::array<std::optional<double>, 3> empirical_slope{};  ///< set when the empirical test ran
  double max_order3_residual = 0.0;      ///< over all coupled conditions up to order 3

  std::array<int, 3> stage_order{};
  bool a_stable = false;
  bool l_stable = false;
  bool b_stable = false;                 ///< algebraic stability certified
  double max_modulus_imag_axis = 0.0;
  double algebraic_min_eigenvalue = 0.0;
  bool stiffly_accurate_implicit = false;
  bool stiffly_accurate_explicit = false;
  bool shared_b = false;
  bool shared_c = false;
  double max_explicit_imag = 0.0;
};

struct CertifyOptions {
  bool empirical = true;  ///< run the nonlinear convergence test for orders above 3
};

PropertyReport certify(const ArkMethod& method, const CertifyOptions& options = {});

/// Convergence slope of `method` on the nonlinear rotor with the given
/// explicit/implicit rates (either may be zero).
double empirical_slope(const ArkMethod& method, double omega_explicit, double omega_implicit);

struct Mismatch {
  std::string field;
  std::string expected;
  std::string actual;
};

struct Comparison {
  std::vector<Mismatch> mismatches;
  bool b_indeterminate = false;  ///< declared B-stable but the algebraic test failed
};

/// Integer and boolean fields must match exactly; max explicit imaginary
/// step within +-0.05.
Comparison compare(const PropertyReport& report, const DeclaredProperties& declared);

}  // namespace arkimex
