#include "arkimex/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arkimex {

namespace {

// Second difference with reflecting ends.
double second_difference(std::span<const double> q, std::size_t j, std::size_t M) {
  const double phi = q[2 * j];
  const double below = j > 0 ? q[2 * (j - 1)] : phi;
  const double above = j + 1 < M ? q[2 * (j + 1)] : phi;
  return above - 2.0 * phi + below;
}

}  // namespace

AcousticColumn::AcousticColumn(Params p, State q0) : p_(p), q0_(std::move(q0)) {
  if (p_.levels < 2) throw std::invalid_argument("acoustic column needs at least two levels");
  if (!(p_.dz > 0.0) || !(p_.sound_speed > 0.0) || !(p_.gravity > 0.0))
    throw std::invalid_argument("acoustic column needs positive dz, sound speed and gravity");
  if (q0_.empty()) {
    q0_.assign(dimension(), 0.0);
    const double centre = 0.5 * static_cast<double>(p_.levels - 1);
    const double width = 0.1 * static_cast<double>(p_.levels);
    for (std::size_t j = 0; j < p_.levels; ++j) {
      const double x = (static_cast<double>(j) - centre) / width;
      q0_[2 * j] = 10.0 * std::exp(-x * x);
    }
  }
  if (q0_.size() != dimension()) throw std::invalid_argument("initial state has the wrong dimension");
}

void AcousticColumn::explicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  // Centered differences of the deviation from the column mean, with zero
  // values outside, and the mean of the result removed: P S P with S the
  // skew centered stencil and P the mean-removing projector.
  const std::size_t M = p_.levels;
  const double f = -p_.advection / (2.0 * p_.dz);
  for (std::size_t v = 0; v < 2; ++v) {
    double mean = 0.0;
    for (std::size_t j = 0; j < M; ++j) mean += q[2 * j + v];
    mean /= static_cast<double>(M);
    double out_mean = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      const double above = j + 1 < M ? q[2 * (j + 1) + v] - mean : 0.0;
      const double below = j > 0 ? q[2 * (j - 1) + v] - mean : 0.0;
      out[2 * j + v] = f * (above - below);
      out_mean += out[2 * j + v];
    }
    out_mean /= static_cast<double>(M);
    for (std::size_t j = 0; j < M; ++j) out[2 * j + v] -= out_mean;
  }
}

void AcousticColumn::implicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  const std::size_t M = p_.levels;
  const double K = p_.sound_speed * p_.sound_speed / (p_.gravity * p_.dz * p_.dz);
  for (std::size_t j = 0; j < M; ++j) {
    out[2 * j] = p_.gravity * q[2 * j + 1];
    out[2 * j + 1] = K * second_difference(q, j, M) * (1.0 + p_.kappa * q[2 * j]);
  }
}

ImplicitJacobian AcousticColumn::implicit_jacobian(double, std::span<const double> q) const {
  const std::size_t M = p_.levels;
  const double K = p_.sound_speed * p_.sound_speed / (p_.gravity * p_.dz * p_.dz);
  PairedBlock b;
  b.offset = 0;
  b.coupling.assign(M, p_.gravity);
  b.diag.resize(M);
  b.lower.resize(M - 1);
  b.upper.resize(M - 1);
  for (std::size_t j = 0; j < M; ++j) {
    const double s = K * (1.0 + p_.kappa * q[2 * j]);
    const double self = (j == 0 || j + 1 == M) ? -1.0 : -2.0;
    b.diag[j] = s * self + K * p_.kappa * second_difference(q, j, M);
    if (j + 1 < M) b.upper[j] = s;
    if (j > 0) b.lower[j - 1] = s;
  }
  ImplicitJacobian jac;
  jac.dimension = dimension();
  jac.blocks.emplace_back(std::move(b));
  return jac;
}

double AcousticColumn::mode_frequency(std::size_t k) const {
  return 2.0 * p_.sound_speed / p_.dz *
         std::sin(std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(p_.levels)));
}

std::vector<double> AcousticColumn::mode_shape(std::size_t k) const {
  const double M = static_cast<double>(p_.levels);
  std::vector<double> v(p_.levels);
  for (std::size_t j = 0; j < p_.levels; ++j)
    v[j] = std::cos(std::numbers::pi * static_cast<double>(k) * (static_cast<double>(j) + 0.5) / M);
  return v;
}

State AcousticColumn::eigenmode(std::size_t k, double amplitude) const {
  State q(dimension(), 0.0);
  const auto v = mode_shape(k);
  for (std::size_t j = 0; j < p_.levels; ++j) q[2 * j] = amplitude * v[j];
  return q;
}

std::optional<State> AcousticColumn::exact_solution(double t) const {
  if (p_.kappa != 0.0 || p_.advection != 0.0) return std::nullopt;
  const std::size_t M = p_.levels;
  const double g = p_.gravity;
  State q(dimension(), 0.0);
  for (std::size_t k = 0; k < M; ++k) {
    const auto v = mode_shape(k);
    const double norm2 = k == 0 ? static_cast<double>(M) : 0.5 * static_cast<double>(M);
    double a0 = 0.0, b0 = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      a0 += q0_[2 * j] * v[j];
      b0 += q0_[2 * j + 1] * v[j];
    }
    a0 /= norm2;
    b0 /= norm2;
    double a, b;
    const double w = mode_frequency(k);
    if (w == 0.0) {
      a = a0 + g * b0 * t;
      b = b0;
    } else {
      const double cs = std::cos(w * t), sn = std::sin(w * t);
      a = a0 * cs + g * b0 / w * sn;
      b = b0 * cs - w * a0 / g * sn;
    }
    for (std::size_t j = 0; j < M; ++j) {
      q[2 * j] += a * v[j];
      q[2 * j + 1] += b * v[j];
    }
  }
  return q;
}

std::optional<double> AcousticColumn::energy(std::span<const double> q) const {
  const std::size_t M = p_.levels;
  const double s = p_.sound_speed / (p_.gravity * p_.dz);
  double e = 0.0;
  for (std::size_t j = 0; j < M; ++j) e += q[2 * j + 1] * q[2 * j + 1];
  for (std::size_t j = 0; j + 1 < M; ++j) {
    const double d = q[2 * (j + 1)] - q[2 * j];
    e += s * s * d * d;
  }
  return e;
}

ComponentClass AcousticColumn::component_class(std::size_t k) const {
  return k % 2 == 0 ? ComponentClass::geopotential : ComponentClass::vertical_velocity;
}

}  // namespace arkimex
