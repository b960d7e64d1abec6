#include "arkimex/tridiagonal.hpp"

#include "arkimex/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace arkimex {

TridiagonalLU::TridiagonalLU(std::vector<double> lower, std::vector<double> diag,
                             std::vector<double> upper, std::size_t block)
    : dl_(std::move(lower)), d_(std::move(diag)), du_(std::move(upper)) {
  const std::size_t n = d_.size();
  if (n == 0) throw std::invalid_argument("empty tridiagonal system");
  if (dl_.size() != n - 1 || du_.size() != n - 1)
    throw std::invalid_argument("tridiagonal band lengths must be n-1");
  du2_.assign(n > 2 ? n - 2 : 0, 0.0);
  ipiv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) ipiv_[i] = i;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d_[i]) >= std::abs(dl_[i])) {
      if (d_[i] != 0.0) {
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      }
    } else {
      const double fact = d_[i] / dl_[i];
      d_[i] = dl_[i];
      dl_[i] = fact;
      const double temp = du_[i];
      du_[i] = d_[i + 1];
      d_[i + 1] = temp - fact * d_[i + 1];
      if (i + 2 < n) {
        du2_[i] = du_[i + 1];
        du_[i + 1] = -fact * du_[i + 1];
      }
      ipiv_[i] = i + 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (d_[i] == 0.0) throw SingularMatrixError(block, i);
}

void TridiagonalLU::solve(std::span<double> b) const {
  const std::size_t n = d_.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (ipiv_[i] == i) {
      b[i + 1] -= dl_[i] * b[i];
    } else {
      const double temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - dl_[i] * b[i];
    }
  }
  b[n - 1] /= d_[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
  for (std::size_t k = n; k-- > 2;) {
    const std::size_t i = k - 2;
    b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
  }
}

}  // namespace arkimex
