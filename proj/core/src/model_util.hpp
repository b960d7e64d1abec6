#pragma once

#include "arkimex/split_problem.hpp"

#include <cmath>

namespace arkimex::detail {

/// 2x2 block [[a, b], [c, d]] at `offset`.
inline TridiagonalBlock pair_block(std::size_t offset, double a, double b, double c, double d) {
  TridiagonalBlock t;
  t.offset = offset;
  t.diag = {a, d};
  t.lower = {c};
  t.upper = {b};
  return t;
}

inline void rotate(double theta, double x, double y, double& xo, double& yo) {
  const double cs = std::cos(theta), sn = std::sin(theta);
  xo = cs * x - sn * y;
  yo = sn * x + cs * y;
}

}  // namespace arkimex::detail
