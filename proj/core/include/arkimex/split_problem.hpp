#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace arkimex {

using State = std::vector<double>;

/// Component classes used to pick absolute Newton tolerances.
enum class ComponentClass {
  generic,
  horizontal_velocity,
  vertical_velocity,
  geopotential,
  potential_temperature,
  pressure_thickness,
};

/// Jacobian block that is tridiagonal over the contiguous index range
/// [offset, offset + diag.size()).
struct TridiagonalBlock {
  std::size_t offset = 0;
  std::vector<double> lower;  ///< J(i+1, i)
  std::vector<double> diag;   ///< J(i, i)
  std::vector<double> upper;  ///< J(i, i+1)

  std::size_t size() const { return diag.size(); }
};

/// Jacobian block over `pairs` interleaved (p_j, s_j) unknowns starting at
/// `offset`, with dp_j/dt depending only on s_j and ds_j/dt depending on
/// p_{j-1}, p_j, p_{j+1}:
///
///   J = [ 0   G ]     G = diag(coupling),  L tridiagonal.
///       [ L   0 ]
///
/// (I - gamma J) is solved through the Schur complement
/// (I - gamma^2 G L) dp = r_p + gamma G r_s, then ds = r_s + gamma L dp.
struct PairedBlock {
  std::size_t offset = 0;
  std::vector<double> coupling;  ///< dp_j/ds_j
  std::vector<double> lower;     ///< ds_{j+1}/dp_j
  std::vector<double> diag;      ///< ds_j/dp_j
  std::vector<double> upper;     ///< ds_j/dp_{j+1}

  std::size_t pairs() const { return diag.size(); }
  std::size_t size() const { return 2 * diag.size(); }
};

using JacobianBlock = std::variant<TridiagonalBlock, PairedBlock>;

/// Block-structured Jacobian of f^I. Blocks partition [0, dimension).
struct ImplicitJacobian {
  std::size_t dimension = 0;
  std::vector<JacobianBlock> blocks;

  /// One zero tridiagonal block over the whole state.
  static ImplicitJacobian zero(std::size_t n);

  /// Throws std::invalid_argument unless the blocks tile [0, dimension).
  void check_partition() const;

  void apply(std::span<const double> v, std::span<double> out) const;
  Eigen::MatrixXd to_dense() const;
};

/// Factorization of (I - gamma J), one independent factorization per block.
class ShiftedSystem {
 public:
  ShiftedSystem(const ImplicitJacobian& jac, double gamma);
  void solve(std::span<double> rhs) const;

 private:
  struct Factor;
  std::vector<std::shared_ptr<const Factor>> factors_;
};

/// An ODE dq/dt = f^E(t, q) + f^I(t, q) split into a non-stiff part treated
/// explicitly and a stiff part treated implicitly.
class SplitProblem {
 public:
  virtual ~SplitProblem() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual State initial_state() const = 0;

  virtual void explicit_rhs(double t, std::span<const double> q, std::span<double> out) const = 0;
  virtual void implicit_rhs(double t, std::span<const double> q, std::span<double> out) const = 0;
  virtual ImplicitJacobian implicit_jacobian(double t, std::span<const double> q) const = 0;

  /// Exact solution from the initial state, when known.
  virtual std::optional<State> exact_solution(double /*t*/) const { return std::nullopt; }

  /// Conserved (or monitored) energy, when defined.
  virtual std::optional<double> energy(std::span<const double> /*q*/) const { return std::nullopt; }

  virtual ComponentClass component_class(std::size_t /*k*/) const { return ComponentClass::generic; }
};

}  // namespace arkimex
