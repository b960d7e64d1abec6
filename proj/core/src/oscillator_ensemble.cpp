#include "arkimex/models.hpp"

#include "model_util.hpp"

#include <numbers>
#include <random>
#include <stdexcept>

namespace arkimex {

OscillatorEnsemble::OscillatorEnsemble(Params p) : p_(p) {
  if (p_.oscillators == 0) throw std::invalid_argument("ensemble needs at least one oscillator");
  std::mt19937_64 rng(p_.seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  q0_.resize(2 * p_.oscillators);
  for (std::size_t k = 0; k < p_.oscillators; ++k) {
    const double a = phase(rng);
    q0_[2 * k] = std::cos(a);
    q0_[2 * k + 1] = std::sin(a);
  }
}

double OscillatorEnsemble::explicit_frequency(std::size_t k) const {
  const double w = p_.omega_max * static_cast<double>(k + 1) / static_cast<double>(p_.oscillators);
  return p_.explicit_scale * (1.0 - p_.implicit_share) * w;
}

double OscillatorEnsemble::implicit_frequency(std::size_t k) const {
  const double w = p_.omega_max * static_cast<double>(k + 1) / static_cast<double>(p_.oscillators);
  return p_.implicit_share * w;
}

void OscillatorEnsemble::explicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  for (std::size_t k = 0; k < p_.oscillators; ++k) {
    const double w = explicit_frequency(k);
    out[2 * k] = -w * q[2 * k + 1];
    out[2 * k + 1] = w * q[2 * k];
  }
}

void OscillatorEnsemble::implicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  for (std::size_t k = 0; k < p_.oscillators; ++k) {
    const double w = implicit_frequency(k);
    out[2 * k] = -w * q[2 * k + 1];
    out[2 * k + 1] = w * q[2 * k];
  }
}

ImplicitJacobian OscillatorEnsemble::implicit_jacobian(double, std::span<const double>) const {
  // One paired block: dx_k/dt = -w_k y_k, dy_k/dt = w_k x_k, no coupling between pairs.
  const std::size_t m = p_.oscillators;
  PairedBlock b;
  b.coupling.resize(m);
  b.diag.resize(m);
  b.lower.assign(m - 1, 0.0);
  b.upper.assign(m - 1, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const double w = implicit_frequency(k);
    b.coupling[k] = -w;
    b.diag[k] = w;
  }
  ImplicitJacobian j;
  j.dimension = dimension();
  j.blocks.emplace_back(std::move(b));
  return j;
}

std::optional<State> OscillatorEnsemble::exact_solution(double t) const {
  State q(dimension());
  for (std::size_t k = 0; k < p_.oscillators; ++k)
    detail::rotate((explicit_frequency(k) + implicit_frequency(k)) * t, q0_[2 * k], q0_[2 * k + 1],
                   q[2 * k], q[2 * k + 1]);
  return q;
}

std::optional<double> OscillatorEnsemble::energy(std::span<const double> q) const {
  double e = 0.0;
  for (double v : q) e += v * v;
  return e;
}

}  // namespace arkimex
