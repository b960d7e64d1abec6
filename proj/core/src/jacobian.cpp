#include "arkimex/split_problem.hpp"

#include "arkimex/tridiagonal.hpp"

#include <stdexcept>

namespace arkimex {

namespace {

std::size_t block_offset(const JacobianBlock& b) {
  return std::visit([](const auto& x) { return x.offset; }, b);
}

std::size_t block_size(const JacobianBlock& b) {
  return std::visit([](const auto& x) { return x.size(); }, b);
}

void check_bands(std::size_t n, const std::vector<double>& lo, const std::vector<double>& up) {
  if (n == 0 || lo.size() != n - 1 || up.size() != n - 1)
    throw std::invalid_argument("Jacobian block band lengths inconsistent");
}

}  // namespace

ImplicitJacobian ImplicitJacobian::zero(std::size_t n) {
  ImplicitJacobian j;
  j.dimension = n;
  if (n == 0) return j;
  TridiagonalBlock b;
  b.diag.assign(n, 0.0);
  b.lower.assign(n - 1, 0.0);
  b.upper.assign(n - 1, 0.0);
  j.blocks.emplace_back(std::move(b));
  return j;
}

void ImplicitJacobian::check_partition() const {
  std::vector<bool> covered(dimension, false);
  for (const auto& blk : blocks) {
    std::visit(
        [](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PairedBlock>) {
            if (x.coupling.size() != x.diag.size())
              throw std::invalid_argument("paired block coupling length mismatch");
          }
          check_bands(x.diag.size(), x.lower, x.upper);
        },
        blk);
    const std::size_t off = block_offset(blk), n = block_size(blk);
    if (off + n > dimension) throw std::invalid_argument("Jacobian block exceeds the state dimension");
    for (std::size_t k = off; k < off + n; ++k) {
      if (covered[k]) throw std::invalid_argument("Jacobian blocks overlap");
      covered[k] = true;
    }
  }
  for (bool c : covered)
    if (!c) throw std::invalid_argument("Jacobian blocks do not cover the state");
}

void ImplicitJacobian::apply(std::span<const double> v, std::span<double> out) const {
  for (std::size_t k = 0; k < dimension; ++k) out[k] = 0.0;
  for (const auto& blk : blocks) {
    if (const auto* t = std::get_if<TridiagonalBlock>(&blk)) {
      const std::size_t o = t->offset, n = t->size();
      for (std::size_t i = 0; i < n; ++i) {
        double s = t->diag[i] * v[o + i];
        if (i > 0) s += t->lower[i - 1] * v[o + i - 1];
        if (i + 1 < n) s += t->upper[i] * v[o + i + 1];
        out[o + i] = s;
      }
    } else {
      const auto& p = std::get<PairedBlock>(blk);
      const std::size_t o = p.offset, m = p.pairs();
      for (std::size_t j = 0; j < m; ++j) {
        out[o + 2 * j] = p.coupling[j] * v[o + 2 * j + 1];
        double s = p.diag[j] * v[o + 2 * j];
        if (j > 0) s += p.lower[j - 1] * v[o + 2 * (j - 1)];
        if (j + 1 < m) s += p.upper[j] * v[o + 2 * (j + 1)];
        out[o + 2 * j + 1] = s;
      }
    }
  }
}

Eigen::MatrixXd ImplicitJacobian::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dimension);
  Eigen::MatrixXd J(n, n);
  std::vector<double> e(dimension, 0.0), col(dimension);
  for (Eigen::Index k = 0; k < n; ++k) {
    e[static_cast<std::size_t>(k)] = 1.0;
    apply(e, col);
    e[static_cast<std::size_t>(k)] = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) J(i, k) = col[static_cast<std::size_t>(i)];
  }
  return J;
}

struct ShiftedSystem::Factor {
  std::size_t offset = 0;
  bool paired = false;
  double gamma = 0.0;
  TridiagonalLU lu;
  // Paired blocks keep G and L for the Schur right-hand side and back-substitution.
  std::vector<double> coupling, lower, diag, upper;
};

ShiftedSystem::ShiftedSystem(const ImplicitJacobian& jac, double gamma) {
  jac.check_partition();
  factors_.reserve(jac.blocks.size());
  for (std::size_t b = 0; b < jac.blocks.size(); ++b) {
    auto f = std::make_shared<Factor>();
    f->gamma = gamma;
    if (const auto* t = std::get_if<TridiagonalBlock>(&jac.blocks[b])) {
      const std::size_t n = t->size();
      std::vector<double> lo(n - 1), d(n), up(n - 1);
      for (std::size_t i = 0; i < n; ++i) d[i] = 1.0 - gamma * t->diag[i];
      for (std::size_t i = 0; i + 1 < n; ++i) {
        lo[i] = -gamma * t->lower[i];
        up[i] = -gamma * t->upper[i];
      }
      f->offset = t->offset;
      f->lu = TridiagonalLU(std::move(lo), std::move(d), std::move(up), b);
    } else {
      const auto& p = std::get<PairedBlock>(jac.blocks[b]);
      const std::size_t m = p.pairs();
      const double g2 = gamma * gamma;
      // Row j of G L is coupling[j] times row j of L.
      std::vector<double> lo(m - 1), d(m), up(m - 1);
      for (std::size_t j = 0; j < m; ++j) d[j] = 1.0 - g2 * p.coupling[j] * p.diag[j];
      for (std::size_t j = 0; j + 1 < m; ++j) {
        lo[j] = -g2 * p.coupling[j + 1] * p.lower[j];
        up[j] = -g2 * p.coupling[j] * p.upper[j];
      }
      f->offset = p.offset;
      f->paired = true;
      f->coupling = p.coupling;
      f->lower = p.lower;
      f->diag = p.diag;
      f->upper = p.upper;
      f->lu = TridiagonalLU(std::move(lo), std::move(d), std::move(up), b);
    }
    factors_.push_back(std::move(f));
  }
}

void ShiftedSystem::solve(std::span<double> rhs) const {
  std::vector<double> work;
  for (const auto& f : factors_) {
    if (!f->paired) {
      f->lu.solve(rhs.subspan(f->offset, f->lu.size()));
      continue;
    }
    const std::size_t m = f->lu.size(), o = f->offset;
    const double g = f->gamma;
    work.resize(m);
    for (std::size_t j = 0; j < m; ++j) work[j] = rhs[o + 2 * j] + g * f->coupling[j] * rhs[o + 2 * j + 1];
    f->lu.solve(work);
    for (std::size_t j = 0; j < m; ++j) {
      double l = f->diag[j] * work[j];
      if (j > 0) l += f->lower[j - 1] * work[j - 1];
      if (j + 1 < m) l += f->upper[j] * work[j + 1];
      rhs[o + 2 * j] = work[j];
      rhs[o + 2 * j + 1] += g * l;
    }
  }
}

}  // namespace arkimex
