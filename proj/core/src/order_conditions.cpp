#include "arkimex/order_conditions.hpp"

#include <algorithm>
#include <cmath>

namespace arkimex {

namespace {

struct Part {
  const Eigen::MatrixXd* A;
  const Eigen::VectorXd* b;
  Eigen::VectorXd c;
  char tag;
};

Part part(const ButcherTableau& t, char tag) {
  return {&t.A, &t.b, t.A.rowwise().sum(), tag};
}

std::string name(const char* what, char tag) { return std::string(what) + (tag ? std::string(1, tag) : ""); }

}  // namespace

std::vector<OrderCondition> order_conditions(const ButcherTableau& t, int max_order) {
  const Eigen::VectorXd c = t.A.rowwise().sum();
  std::vector<OrderCondition> out;
  if (max_order >= 1) out.push_back({"b.1", 1, t.b.sum() - 1.0});
  if (max_order >= 2) out.push_back({"b.c", 2, t.b.dot(c) - 0.5});
  if (max_order >= 3) {
    out.push_back({"b.c^2", 3, t.b.dot(c.cwiseProduct(c)) - 1.0 / 3.0});
    out.push_back({"b.A.c", 3, t.b.dot(t.A * c) - 1.0 / 6.0});
  }
  return out;
}

std::vector<OrderCondition> coupled_order_conditions(const ArkMethod& m, int max_order) {
  const Part parts[2] = {part(m.explicit_tableau, 'E'), part(m.implicit_tableau, 'I')};
  std::vector<OrderCondition> out;
  for (const Part& s : parts) {
    if (max_order >= 1) out.push_back({name("b", s.tag) + ".1", 1, s.b->sum() - 1.0});
    for (const Part& v : parts) {
      if (max_order >= 2)
        out.push_back({name("b", s.tag) + "." + name("c", v.tag), 2, s.b->dot(v.c) - 0.5});
      if (max_order < 3) continue;
      for (const Part& u : parts) {
        out.push_back({name("b", s.tag) + "." + name("c", v.tag) + name("c", u.tag), 3,
                       s.b->dot(v.c.cwiseProduct(u.c)) - 1.0 / 3.0});
        out.push_back({name("b", s.tag) + "." + name("A", v.tag) + "." + name("c", u.tag), 3,
                       s.b->dot(*v.A * u.c) - 1.0 / 6.0});
      }
    }
  }
  return out;
}

namespace {

int highest_satisfied(const std::vector<OrderCondition>& conds, int max_order, double tol) {
  int p = 0;
  for (int k = 1; k <= max_order; ++k) {
    const bool ok = std::all_of(conds.begin(), conds.end(), [&](const OrderCondition& c) {
      return c.order != k || std::abs(c.residual) <= tol;
    });
    if (!ok) break;
    p = k;
  }
  return p;
}

}  // namespace

int algebraic_order(const ButcherTableau& t, double tol) {
  return highest_satisfied(order_conditions(t, 3), 3, tol);
}

int coupled_algebraic_order(const ArkMethod& m, double tol) {
  return highest_satisfied(coupled_order_conditions(m, 3), 3, tol);
}

int stage_order(const ButcherTableau& t, double tol, int max_q) {
  const Eigen::ArrayXd c = t.c.array();
  int q = 0;
  for (int k = 1; k <= max_q; ++k) {
    const Eigen::VectorXd lhs = t.A * c.pow(k - 1).matrix();
    const Eigen::VectorXd rhs = (c.pow(k) / k).matrix();
    if ((lhs - rhs).cwiseAbs().maxCoeff() > tol) break;
    q = k;
  }
  return q;
}

int coupled_stage_order(const ArkMethod& m, double tol) {
  if ((m.explicit_tableau.c - m.implicit_tableau.c).cwiseAbs().maxCoeff() > tol) return 0;
  return std::min(stage_order(m.explicit_tableau, tol), stage_order(m.implicit_tableau, tol));
}

}  // namespace arkimex
