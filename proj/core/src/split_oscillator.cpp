#include "arkimex/models.hpp"

#include "model_util.hpp"

namespace arkimex {

SplitOscillator::SplitOscillator(double omega_explicit, double omega_implicit, std::array<double, 2> q0)
    : we_(omega_explicit), wi_(omega_implicit), q0_(q0) {}

void SplitOscillator::explicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  out[0] = -we_ * q[1];
  out[1] = we_ * q[0];
}

void SplitOscillator::implicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  out[0] = -wi_ * q[1];
  out[1] = wi_ * q[0];
}

ImplicitJacobian SplitOscillator::implicit_jacobian(double, std::span<const double>) const {
  ImplicitJacobian j;
  j.dimension = 2;
  j.blocks.emplace_back(detail::pair_block(0, 0.0, -wi_, wi_, 0.0));
  return j;
}

std::optional<State> SplitOscillator::exact_solution(double t) const {
  State q(2);
  detail::rotate((we_ + wi_) * t, q0_[0], q0_[1], q[0], q[1]);
  return q;
}

std::optional<double> SplitOscillator::energy(std::span<const double> q) const {
  return q[0] * q[0] + q[1] * q[1];
}

}  // namespace arkimex
