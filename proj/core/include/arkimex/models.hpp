#pragma once

#include "arkimex/split_problem.hpp"

#include <array>
#include <cstdint>
#include <map>

namespace arkimex {

/// Linear rotation q' = (omega_E + omega_I) J q, J = [[0,-1],[1,0]], split as
/// f^E = omega_E J q and f^I = omega_I J q. The exact solution is a rotation
/// by (omega_E + omega_I) t; |q|^2 is conserved.
class SplitOscillator final : public SplitProblem {
 public:
  SplitOscillator(double omega_explicit, double omega_implicit, std::array<double, 2> q0 = {1.0, 0.0});

  std::string name() const override { return "split_oscillator"; }
  std::size_t dimension() const override { return 2; }
  State initial_state() const override { return {q0_[0], q0_[1]}; }
  void explicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  void implicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  ImplicitJacobian implicit_jacobian(double t, std::span<const double> q) const override;
  std::optional<State> exact_solution(double t) const override;
  std::optional<double> energy(std::span<const double> q) const override;

 private:
  double we_, wi_;
  std::array<double, 2> q0_;
};

/// Nonlinear rotation with non-proportional parts:
///   f^E = omega_E |q|^2 J q,   f^I = omega_I |q|^4 J q.
/// |q| is invariant, so the exact solution rotates q0 at the constant rate
/// omega_E |q0|^2 + omega_I |q0|^4.
class NonlinearRotor final : public SplitProblem {
 public:
  NonlinearRotor(double omega_explicit, double omega_implicit, std::array<double, 2> q0 = {0.8, 0.6});

  std::string name() const override { return "nonlinear_rotor"; }
  std::size_t dimension() const override { return 2; }
  State initial_state() const override { return {q0_[0], q0_[1]}; }
  void explicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  void implicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  ImplicitJacobian implicit_jacobian(double t, std::span<const double> q) const override;
  std::optional<State> exact_solution(double t) const override;
  std::optional<double> energy(std::span<const double> q) const override;

 private:
  double we_, wi_;
  std::array<double, 2> q0_;
};

/// K uncoupled oscillators with frequencies omega_k = omega_max (k+1)/K.
/// A fraction `implicit_share` of each frequency is treated implicitly; the
/// explicit frequencies are multiplied by `explicit_scale`. Initial phases
/// are drawn from `seed`.
class OscillatorEnsemble final : public SplitProblem {
 public:
  struct Params {
    std::size_t oscillators = 16;
    double omega_max = 1.0;
    double implicit_share = 0.0;
    double explicit_scale = 1.0;
    std::uint64_t seed = 0;
  };

  explicit OscillatorEnsemble(Params p);

  std::string name() const override { return "oscillator_ensemble"; }
  std::size_t dimension() const override { return 2 * p_.oscillators; }
  State initial_state() const override { return q0_; }
  void explicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  void implicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  ImplicitJacobian implicit_jacobian(double t, std::span<const double> q) const override;
  std::optional<State> exact_solution(double t) const override;
  std::optional<double> energy(std::span<const double> q) const override;

  double explicit_frequency(std::size_t k) const;
  double implicit_frequency(std::size_t k) const;
  const Params& params() const { return p_; }

 private:
  Params p_;
  State q0_;
};

/// Vertical acoustic column on M interfaces with interleaved state
/// (phi_0, w_0, phi_1, w_1, ...).
///
/// Implicit part (vertical acoustics):
///   dphi_j/dt = g w_j
///   dw_j/dt   = c^2/(g dz^2) (phi_{j+1} - 2 phi_j + phi_{j-1}) (1 + kappa phi_j)
/// with reflecting ends (phi_{-1} = phi_0, phi_M = phi_{M-1}). For kappa = 0
/// the eigenvalues are +-i (2c/dz) sin(k pi / (2M)), k = 0..M-1.
///
/// Explicit part: advection -a d/dz of both fields by centered differences
/// with zero values outside the column, applied to the deviation from the
/// column mean and with the mean of the tendency removed. The operator is
/// skew-symmetric and vanishes on constant fields.
class AcousticColumn final : public SplitProblem {
 public:
  struct Params {
    std::size_t levels = 32;
    double dz = 500.0;
    double sound_speed = 340.0;
    double gravity = 9.81;
    double advection = 3.4;
    double kappa = 0.0;
  };

  /// Initial state defaults to a Gaussian geopotential bump of amplitude 10
  /// centred in the column, w = 0.
  explicit AcousticColumn(Params p, State q0 = {});

  std::string name() const override { return "acoustic_column"; }
  std::size_t dimension() const override { return 2 * p_.levels; }
  State initial_state() const override { return q0_; }
  void explicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  void implicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  ImplicitJacobian implicit_jacobian(double t, std::span<const double> q) const override;
  /// Available for kappa = 0 and advection = 0 (modal synthesis).
  std::optional<State> exact_solution(double t) const override;
  /// sum w^2 + c^2/(g dz)^2 sum (phi_{j+1} - phi_j)^2; conserved by the
  /// implicit part when kappa = 0.
  std::optional<double> energy(std::span<const double> q) const override;
  ComponentClass component_class(std::size_t k) const override;

  /// (2c/dz) sin(k pi / (2M)).
  double mode_frequency(std::size_t k) const;
  /// cos(pi k (j + 1/2) / M) for j = 0..M-1.
  std::vector<double> mode_shape(std::size_t k) const;
  /// State with phi = amplitude * mode_shape(k), w = 0.
  State eigenmode(std::size_t k, double amplitude) const;

  const Params& params() const { return p_; }

 private:
  Params p_;
  State q0_;
};

/// Periodic 1-D hyperviscosity: tendency -nu Laplacian^2 u on n points with
/// spacing dx. Eigenvalues of -Laplacian are (4/dx^2) sin^2(pi k / n).
class HyperviscosityOperator {
 public:
  HyperviscosityOperator(std::size_t points, double dx, double nu);

  std::size_t points() const { return n_; }
  double nu() const { return nu_; }

  /// out = -nu Laplacian^2 u over u[offset + stride*j], j = 0..n-1.
  void tendency(std::span<const double> u, std::span<double> out, std::size_t offset = 0,
                std::size_t stride = 1) const;
  double laplacian_eigenvalue(std::size_t k) const;

 private:
  std::size_t n_;
  double dx_;
  double nu_;
};

/// Split post-step: `substeps` forward-Euler substeps of size dt/substeps of
/// the hyperviscosity tendency, applied to each strided field in `offsets`.
/// Zero substeps disables it.
class HyperviscosityPostStep {
 public:
  HyperviscosityPostStep(HyperviscosityOperator op, int substeps, std::size_t stride,
                         std::vector<std::size_t> offsets);

  void operator()(std::span<double> q, double t, double dt) const;

 private:
  HyperviscosityOperator op_;
  int substeps_;
  std::size_t stride_;
  std::vector<std::size_t> offsets_;
};

/// Split oscillator (x, y) with an attached periodic field u_0..u_{n-1}:
/// state (x, y, u_0, ..., u_{n-1}). f^E and f^I rotate (x, y) as in
/// SplitOscillator and leave u unchanged; u is only acted on by the
/// hyperviscosity post-step. The exact solution of the unsplit system is the
/// rotation together with u decaying by exp(-nu lambda_k^2 t) per Fourier mode.
class HyperviscousOscillator final : public SplitProblem {
 public:
  struct Params {
    double omega_explicit = 1.0;
    double omega_implicit = 10.0;
    std::array<double, 2> q0 = {0.8, 0.6};
    std::size_t points = 8;
    double dx = 1.0;
    double nu = 1.0;
    std::map<int, double> modes = {{0, 2.0}, {1, 0.5}, {2, 0.25}};  ///< wavenumber -> cosine amplitude
  };

  explicit HyperviscousOscillator(Params p);

  std::string name() const override { return "hyperviscous_oscillator"; }
  std::size_t dimension() const override { return 2 + p_.points; }
  State initial_state() const override;
  void explicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  void implicit_rhs(double t, std::span<const double> q, std::span<double> out) const override;
  ImplicitJacobian implicit_jacobian(double t, std::span<const double> q) const override;
  std::optional<State> exact_solution(double t) const override;
  /// x^2 + y^2 + sum u^2.
  std::optional<double> energy(std::span<const double> q) const override;

  HyperviscosityOperator hyperviscosity() const;
  /// `substeps` forward-Euler substeps on u; 0 disables.
  HyperviscosityPostStep post_step(int substeps) const;
  const Params& params() const { return p_; }

 private:
  Params p_;
};

}  // namespace arkimex
