#include "arkimex/models.hpp"

#include "model_util.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace arkimex {

HyperviscosityOperator::HyperviscosityOperator(std::size_t points, double dx, double nu)
    : n_(points), dx_(dx), nu_(nu) {
  if (n_ < 3) throw std::invalid_argument("hyperviscosity needs at least three points");
  if (!(dx_ > 0.0)) throw std::invalid_argument("grid spacing must be positive");
}

double HyperviscosityOperator::laplacian_eigenvalue(std::size_t k) const {
  const double s = std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_));
  return 4.0 / (dx_ * dx_) * s * s;
}

void HyperviscosityOperator::tendency(std::span<const double> u, std::span<double> out, std::size_t offset,
                                      std::size_t stride) const {
  const double h2 = 1.0 / (dx_ * dx_);
  auto at = [&](std::size_t j) { return u[offset + stride * j]; };
  std::vector<double> lap(n_);
  for (std::size_t j = 0; j < n_; ++j)
    lap[j] = h2 * (at((j + 1) % n_) - 2.0 * at(j) + at((j + n_ - 1) % n_));
  for (std::size_t j = 0; j < n_; ++j)
    out[offset + stride * j] = -nu_ * h2 * (lap[(j + 1) % n_] - 2.0 * lap[j] + lap[(j + n_ - 1) % n_]);
}

HyperviscosityPostStep::HyperviscosityPostStep(HyperviscosityOperator op, int substeps, std::size_t stride,
                                               std::vector<std::size_t> offsets)
    : op_(op), substeps_(substeps), stride_(stride), offsets_(std::move(offsets)) {
  if (substeps_ < 0) throw std::invalid_argument("substep count must be non-negative");
}

void HyperviscosityPostStep::operator()(std::span<double> q, double, double dt) const {
  if (substeps_ == 0) return;
  const double h = dt / substeps_;
  std::vector<double> tend(q.size());
  for (int k = 0; k < substeps_; ++k) {
    for (std::size_t off : offsets_) op_.tendency(q, tend, off, stride_);
    for (std::size_t off : offsets_)
      for (std::size_t j = 0; j < op_.points(); ++j) q[off + stride_ * j] += h * tend[off + stride_ * j];
  }
}

HyperviscousOscillator::HyperviscousOscillator(Params p) : p_(std::move(p)) {
  hyperviscosity();  // validates points and dx
}

State HyperviscousOscillator::initial_state() const { return *exact_solution(0.0); }

void HyperviscousOscillator::explicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  out[0] = -p_.omega_explicit * q[1];
  out[1] = p_.omega_explicit * q[0];
}

void HyperviscousOscillator::implicit_rhs(double, std::span<const double> q, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  out[0] = -p_.omega_implicit * q[1];
  out[1] = p_.omega_implicit * q[0];
}

ImplicitJacobian HyperviscousOscillator::implicit_jacobian(double, std::span<const double>) const {
  ImplicitJacobian j;
  j.dimension = dimension();
  j.blocks.emplace_back(detail::pair_block(0, 0.0, -p_.omega_implicit, p_.omega_implicit, 0.0));
  TridiagonalBlock field;
  field.offset = 2;
  field.diag.assign(p_.points, 0.0);
  field.lower.assign(p_.points - 1, 0.0);
  field.upper.assign(p_.points - 1, 0.0);
  j.blocks.emplace_back(std::move(field));
  return j;
}

std::optional<State> HyperviscousOscillator::exact_solution(double t) const {
  State q(dimension(), 0.0);
  const double angle = (p_.omega_explicit + p_.omega_implicit) * t;
  q[0] = std::cos(angle) * p_.q0[0] - std::sin(angle) * p_.q0[1];
  q[1] = std::sin(angle) * p_.q0[0] + std::cos(angle) * p_.q0[1];
  const HyperviscosityOperator op = hyperviscosity();
  const int n = static_cast<int>(p_.points);
  for (const auto& [m, amp] : p_.modes) {
    const double lam = op.laplacian_eigenvalue(static_cast<std::size_t>(((m % n) + n) % n));
    const double decay = std::exp(-p_.nu * lam * lam * t);
    for (std::size_t j = 0; j < p_.points; ++j)
      q[2 + j] += amp * decay * std::cos(2.0 * std::numbers::pi * m * static_cast<double>(j) / n);
  }
  return q;
}

std::optional<double> HyperviscousOscillator::energy(std::span<const double> q) const {
  double e = 0.0;
  for (double v : q) e += v * v;
  return e;
}

HyperviscosityOperator HyperviscousOscillator::hyperviscosity() const {
  return HyperviscosityOperator(p_.points, p_.dx, p_.nu);
}

HyperviscosityPostStep HyperviscousOscillator::post_step(int substeps) const {
  return HyperviscosityPostStep(hyperviscosity(), substeps, 1, {2});
}

}  // namespace arkimex
