#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace arkimex {

/// LU factorization of a tridiagonal matrix with partial pivoting (the
/// LAPACK dgttrf/dgttrs scheme). Row interchanges fill a second
/// superdiagonal.
class TridiagonalLU {
 public:
  TridiagonalLU() = default;

  /// lower[i] = M(i+1, i), diag[i] = M(i, i), upper[i] = M(i, i+1).
  /// Throws SingularMatrixError(block, pivot) on an exact zero pivot.
  TridiagonalLU(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper,
                std::size_t block = 0);

  std::size_t size() const noexcept { return d_.size(); }

  /// Solves in place.
  void solve(std::span<double> rhs) const;

 private:
  std::vector<double> dl_, d_, du_, du2_;
  std::vector<std::size_t> ipiv_;
};

}  // namespace arkimex
