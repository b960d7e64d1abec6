#include "arkimex/stability.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace arkimex {

Complex stability_function(const ButcherTableau& t, Complex z) {
  const auto s = static_cast<Eigen::Index>(t.stages());
  std::vector<Complex> Y(static_cast<std::size_t>(s));
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < s; ++i) {
    Complex sum = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) sum += z * t.A(i, j) * Y[static_cast<std::size_t>(j)];
    Y[static_cast<std::size_t>(i)] = sum / (1.0 - z * t.A(i, i));
    acc += t.b(i) * Y[static_cast<std::size_t>(i)];
  }
  return 1.0 + z * acc;
}

std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& M) {
  const auto n = M.rows();
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXd Mk = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Mk = M * Mk + c[static_cast<std::size_t>(n - k + 1)] * I;
    c[static_cast<std::size_t>(n - k)] = -(M * Mk).trace() / static_cast<double>(k);
  }
  return c;
}

RationalStability stability_polynomials(const ButcherTableau& t) {
  const auto s = static_cast<Eigen::Index>(t.stages());
  const Eigen::MatrixXd B = t.A - Eigen::VectorXd::Ones(s) * t.b.transpose();
  const std::vector<double> chi = characteristic_polynomial(B);
  RationalStability r;
  r.numerator.assign(chi.rbegin(), chi.rend());
  r.denominator = {1.0};
  for (Eigen::Index i = 0; i < s; ++i) {
    const double a = t.A(i, i);
    if (a == 0.0) continue;
    std::vector<double> next(r.denominator.size() + 1, 0.0);
    for (std::size_t k = 0; k < r.denominator.size(); ++k) {
      next[k] += r.denominator[k];
      next[k + 1] -= a * r.denominator[k];
    }
    r.denominator = std::move(next);
  }
  return r;
}

AStabilityResult check_a_stability(const ButcherTableau& t, int samples) {
  AStabilityResult r;
  for (Eigen::Index i = 0; i < t.A.rows(); ++i)
    if (t.A(i, i) < 0.0) return r;  // pole in the left half-plane
  const double lo = std::log(1e-3), hi = std::log(1e6);
  r.a_stable = true;
  for (int k = 0; k < samples; ++k) {
    const double y = std::exp(lo + (hi - lo) * k / (samples - 1));
    const double m = std::abs(stability_function(t, Complex(0.0, y)));
    if (m > r.max_modulus) {
      r.max_modulus = m;
      r.at_y = y;
    }
  }
  r.a_stable = r.max_modulus <= 1.0 + 1e-9;
  return r;
}

bool is_l_stable(const ButcherTableau& t) {
  if (!check_a_stability(t).a_stable) return false;
  const RationalStability r = stability_polynomials(t);
  const std::size_t deg_q = r.denominator.size() - 1;
  double scale = 0.0;
  for (double p : r.numerator) scale = std::max(scale, std::abs(p));
  for (std::size_t k = deg_q; k < r.numerator.size(); ++k)
    if (std::abs(r.numerator[k]) > 1e-10 * scale) return false;
  return true;
}

AlgebraicStabilityResult check_algebraic_stability(const ButcherTableau& t) {
  const Eigen::MatrixXd Bd = t.b.asDiagonal();
  const Eigen::MatrixXd M = Bd * t.A + t.A.transpose() * Bd - t.b * t.b.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M, Eigen::EigenvaluesOnly);
  AlgebraicStabilityResult r;
  r.min_weight = t.b.minCoeff();
  r.min_eigenvalue = eig.eigenvalues().minCoeff();
  r.certified = r.min_weight >= -1e-14 && r.min_eigenvalue >= -1e-12;
  return r;
}

double max_imag_stable_step(const ButcherTableau& t, double grid) {
  constexpr double slack = 1e-10;
  auto stable = [&](double y) { return std::abs(stability_function(t, Complex(0.0, y))) <= 1.0 + slack; };
  const double cap = static_cast<double>(t.stages());
  double y = 0.0;
  while (y < cap) {
    const double next = std::min(y + grid, cap);
    if (!stable(next)) {
      if (y == 0.0) return 0.0;  // unstable at the first grid point
      double lo = y, hi = next;
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (stable(mid) ? lo : hi) = mid;
      }
      return lo;
    }
    y = next;
  }
  return cap;
}

bool is_stiffly_accurate(const ButcherTableau& t, double tol) {
  const auto s = t.A.rows();
  if (s == 0) return false;
  return (t.A.row(s - 1).transpose() - t.b).cwiseAbs().maxCoeff() <= tol;
}

namespace {

Complex horner(const std::vector<Complex>& p, Complex z) {
  Complex v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
  return v;
}

}  // namespace

StabilityBoundary stability_boundary(const ButcherTableau& t, int samples) {
  const RationalStability r = stability_polynomials(t);
  StabilityBoundary out;
  double scale = 0.0;
  for (double p : r.numerator) scale = std::max(scale, std::abs(p));
  for (double q : r.denominator) scale = std::max(scale, std::abs(q));

  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const Complex e = std::polar(1.0, theta);
    const std::size_t n = std::max(r.numerator.size(), r.denominator.size());
    std::vector<Complex> f(n, 0.0);
    for (std::size_t j = 0; j < r.numerator.size(); ++j) f[j] += r.numerator[j];
    for (std::size_t j = 0; j < r.denominator.size(); ++j) f[j] -= e * r.denominator[j];
    while (f.size() > 1 && std::abs(f.back()) <= 1e-13 * scale) f.pop_back();
    const auto deg = static_cast<Eigen::Index>(f.size()) - 1;
    if (deg < 1) {
      out.unconverged_angles.push_back(theta);
      continue;
    }
    std::vector<Complex> df(f.size() - 1);
    for (std::size_t j = 1; j < f.size(); ++j) df[j - 1] = static_cast<double>(j) * f[j];

    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    for (Eigen::Index i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < deg; ++i) C(i, deg - 1) = -f[static_cast<std::size_t>(i)] / f.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(C, false);
    bool all_converged = ces.info() == Eigen::Success;
    for (Eigen::Index i = 0; i < deg && ces.info() == Eigen::Success; ++i) {
      Complex z = ces.eigenvalues()(i);
      bool converged = false;
      for (int it = 0; it < 30; ++it) {
        const Complex fz = horner(f, z);
        if (std::abs(fz) <= 1e-13 * scale * std::max(1.0, std::pow(std::abs(z), static_cast<double>(deg)))) {
          converged = true;
          break;
        }
        const Complex d = horner(df, z);
        if (d == 0.0) break;
        z -= fz / d;
      }
      if (converged)
        out.points.push_back({theta, z});
      else
        all_converged = false;
    }
    if (!all_converged) out.unconverged_angles.push_back(theta);
  }
  return out;
}

std::vector<ImagAxisSample> imag_axis_modulus(const ButcherTableau& t, int samples) {
  std::vector<ImagAxisSample> out;
  if (samples < 1) return out;
  const double lo = std::log(1e-3), hi = std::log(1e6);
  for (int k = 0; k < samples; ++k) {
    const double y = samples == 1 ? 1e-3 : std::exp(lo + (hi - lo) * k / (samples - 1));
    out.push_back({y, std::abs(stability_function(t, Complex(0.0, y)))});
  }
  return out;
}

}  // namespace arkimex
