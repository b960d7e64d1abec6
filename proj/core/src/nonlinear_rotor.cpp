#include "arkimex/models.hpp"

#include "model_util.hpp"

namespace arkimex {

NonlinearRotor::NonlinearRotor(double omega_explicit, double omega_implicit, std::array<double, 2> q0)
    : we_(omega_explicit), wi_(omega_implicit), q0_(q0) {}

void NonlinearRotor::explicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  const double r2 = q[0] * q[0] + q[1] * q[1];
  out[0] = -we_ * r2 * q[1];
  out[1] = we_ * r2 * q[0];
}

void NonlinearRotor::implicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  const double r2 = q[0] * q[0] + q[1] * q[1];
  const double r4 = r2 * r2;
  out[0] = -wi_ * r4 * q[1];
  out[1] = wi_ * r4 * q[0];
}

// d/dq (|q|^4 J q) = |q|^4 J + 4 |q|^2 (J q) q^T
ImplicitJacobian NonlinearRotor::implicit_jacobian(double, std::span<const double> q) const {
  const double x = q[0], y = q[1];
  const double r2 = x * x + y * y, r4 = r2 * r2;
  ImplicitJacobian j;
  j.dimension = 2;
  j.blocks.emplace_back(detail::pair_block(0, wi_ * (-4.0 * r2 * x * y), wi_ * (-r4 - 4.0 * r2 * y * y),
                                           wi_ * (r4 + 4.0 * r2 * x * x), wi_ * (4.0 * r2 * x * y)));
  return j;
}

std::optional<State> NonlinearRotor::exact_solution(double t) const {
  const double r2 = q0_[0] * q0_[0] + q0_[1] * q0_[1];
  State q(2);
  detail::rotate((we_ * r2 + wi_ * r2 * r2) * t, q0_[0], q0_[1], q[0], q[1]);
  return q;
}

std::optional<double> NonlinearRotor::energy(std::span<const double> q) const {
  return q[0] * q[0] + q[1] * q[1];
}

}  // namespace arkimex
