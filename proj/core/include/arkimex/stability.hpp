#pragma once

#include "arkimex/tableau.hpp"

#include <complex>
#include <vector>

namespace arkimex {

using Complex = std::complex<double>;

/// R(z) = 1 + z b^T (I - zA)^{-1} 1, by forward substitution (A lower triangular).
Complex stability_function(const ButcherTableau& t, Complex z);

/// R(z) = P(z)/Q(z) with P(z) = det(I - z(A - 1 b^T)) and
/// Q(z) = prod_i (1 - z a_ii). Coefficients are in increasing powers of z.
struct RationalStability {
  std::vector<double> numerator;
  std::vector<double> denominator;
};
RationalStability stability_polynomials(const ButcherTableau& t);

/// Coefficients of det(lambda I - M) in increasing powers of lambda
/// (Faddeev-LeVerrier); the leading coefficient is 1.
std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& M);

struct AStabilityResult {
  bool a_stable = false;
  double max_modulus = 0.0;   ///< max |R(iy)| over the sample grid
  double at_y = 0.0;
};

/// Samples |R(iy)| on a geometric grid over [1e-3, 1e6] and requires
/// |R| <= 1 + 1e-9 and no poles in the left half-plane.
AStabilityResult check_a_stability(const ButcherTableau& t, int samples = 4000);

/// A-stable and the numerator degree is below the denominator degree
/// (R(z) -> 0 as z -> infinity).
bool is_l_stable(const ButcherTableau& t);

struct AlgebraicStabilityResult {
  bool certified = false;         ///< b >= 0 and M positive semidefinite
  double min_weight = 0.0;
  double min_eigenvalue = 0.0;    ///< of M = diag(b)A + A^T diag(b) - b b^T
};
AlgebraicStabilityResult check_algebraic_stability(const ButcherTableau& t);

/// Largest y such that |P(iy')| <= 1 + 1e-10 for all 0 <= y' <= y, for an
/// explicit tableau. Scans with step `grid`, refines by bisection, and is
/// capped at the stage count.
double max_imag_stable_step(const ButcherTableau& t, double grid = 1e-4);

/// Last row of A equals b within 1e-13.
bool is_stiffly_accurate(const ButcherTableau& t, double tol = 1e-13);

struct BoundaryPoint {
  double theta;
  Complex z;
};

struct StabilityBoundary {
  std::vector<BoundaryPoint> points;
  std::vector<double> unconverged_angles;
};

/// Points z with R(z) = e^{i theta} for `samples` angles in [0, 2pi),
/// from companion-matrix roots of P(z) - e^{i theta} Q(z) polished by Newton.
StabilityBoundary stability_boundary(const ButcherTableau& t, int samples);

struct ImagAxisSample {
  double y;
  double modulus;  ///< |R(iy)|
};

/// |R(iy)| on `samples` geometrically spaced y in [1e-3, 1e6].
std::vector<ImagAxisSample> imag_axis_modulus(const ButcherTableau& t, int samples);

}  // namespace arkimex
