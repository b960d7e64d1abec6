#include "arkimex/tableau.hpp"

#include "arkimex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace arkimex {

bool ButcherTableau::is_diagonally_implicit() const {
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = i + 1; j < A.cols(); ++j)
      if (A(i, j) != 0.0) return false;
  return true;
}

bool ButcherTableau::is_explicit() const {
  if (!is_diagonally_implicit()) return false;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    if (A(i, i) != 0.0) return false;
  return true;
}

bool ButcherTableau::is_zero() const {
  return (A.array() == 0.0).all() && (b.array() == 0.0).all() && (c.array() == 0.0).all();
}

int ArkMethod::implicit_solve_count() const {
  int n = 0;
  for (Eigen::Index i = 0; i < implicit_tableau.A.rows(); ++i)
    if (implicit_tableau.A(i, i) != 0.0) ++n;
  return n;
}

namespace {

std::vector<bool> stages_read(const ButcherTableau& t, bool include_diagonal) {
  const auto s = static_cast<Eigen::Index>(t.stages());
  std::vector<bool> needed(t.stages(), false);
  for (Eigen::Index j = 0; j < s; ++j) {
    bool read = t.b(j) != 0.0;
    for (Eigen::Index i = include_diagonal ? j : j + 1; i < s && !read; ++i)
      read = t.A(i, j) != 0.0;
    needed[static_cast<std::size_t>(j)] = read;
  }
  return needed;
}

}  // namespace

std::vector<bool> ArkMethod::explicit_stage_needed() const {
  return stages_read(explicit_tableau, false);
}

int ArkMethod::explicit_eval_count() const {
  int n = 0;
  for (bool b : explicit_stage_needed()) n += b ? 1 : 0;
  return n;
}

std::vector<bool> ArkMethod::implicit_stage_needed() const {
  return stages_read(implicit_tableau, false);
}

namespace {

void check_shape(const ArkMethod& m, const ButcherTableau& t, const char* part) {
  const auto s = t.b.size();
  if (t.A.rows() != s || t.A.cols() != s || t.c.size() != s) {
    std::ostringstream os;
    os << part << " tableau has inconsistent dimensions";
    throw InvariantError(m.name, os.str());
  }
  for (Eigen::Index i = 0; i < s; ++i) {
    const double row_sum = t.A.row(i).sum();
    if (std::abs(row_sum - t.c(i)) > 1e-12 * std::max(1.0, std::abs(t.c(i)))) {
      std::ostringstream os;
      os << part << " c[" << i << "] differs from the row sum of A";
      throw InvariantError(m.name, os.str());
    }
  }
}

}  // namespace

void validate(const ArkMethod& m) {
  if (m.name.empty()) throw InvariantError("<unnamed>", "empty method name");
  if (m.explicit_tableau.stages() == 0) throw InvariantError(m.name, "zero stages");
  if (m.explicit_tableau.stages() != m.implicit_tableau.stages())
    throw InvariantError(m.name, "explicit and implicit stage counts differ");
  check_shape(m, m.explicit_tableau, "explicit");
  check_shape(m, m.implicit_tableau, "implicit");
  if (!m.explicit_tableau.is_explicit())
    throw InvariantError(m.name, "explicit A is not strictly lower triangular");
  if (!m.implicit_tableau.is_diagonally_implicit())
    throw InvariantError(m.name, "implicit A is not lower triangular");
  if (m.pure_explicit && !m.implicit_tableau.is_zero())
    throw InvariantError(m.name, "pure-explicit method has a nonzero implicit tableau");
  if (m.declared_implicit_solves != m.implicit_solve_count()) {
    std::ostringstream os;
    os << "declared " << m.declared_implicit_solves << " implicit solves but the diagonal has "
       << m.implicit_solve_count() << " nonzero entries";
    throw InvariantError(m.name, os.str());
  }
}

ArkMethod make_explicit_method(std::string name, ButcherTableau tableau, int order) {
  const auto s = static_cast<Eigen::Index>(tableau.stages());
  ArkMethod m;
  m.name = std::move(name);
  m.implicit_tableau.A = Eigen::MatrixXd::Zero(s, s);
  m.implicit_tableau.b = Eigen::VectorXd::Zero(s);
  m.implicit_tableau.c = Eigen::VectorXd::Zero(s);
  m.explicit_tableau = std::move(tableau);
  m.declared_order = order;
  m.pure_explicit = true;
  m.declared_explicit_evals = m.explicit_eval_count();
  validate(m);
  return m;
}

}  // namespace arkimex
