#include "arkimex/errors.hpp"
#include "arkimex/split_problem.hpp"
#include "arkimex/tridiagonal.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <random>

using namespace arkimex;

namespace {

Eigen::MatrixXd dense(const std::vector<double>& lo, const std::vector<double>& d, const std::vector<double>& up) {
  const auto n = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    M(i, i) = d[static_cast<std::size_t>(i)];
    if (i + 1 < n) {
      M(i + 1, i) = lo[static_cast<std::size_t>(i)];
      M(i, i + 1) = up[static_cast<std::size_t>(i)];
    }
  }
  return M;
}

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

struct Bands {
  std::vector<double> lo, d, up;
};

Bands random_bands(std::size_t n, std::mt19937_64& rng, bool dominant) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Bands b{std::vector<double>(n - 1), std::vector<double>(n), std::vector<double>(n - 1)};
  for (auto& x : b.lo) x = u(rng);
  for (auto& x : b.up) x = u(rng);
  for (auto& x : b.d) x = dominant ? 2.5 + u(rng) : 0.1 * u(rng);
  return b;
}

}  // namespace

TEST(TridiagonalLU, IdentityReturnsRhs) {
  TridiagonalLU lu(std::vector<double>(4, 0.0), std::vector<double>(5, 1.0), std::vector<double>(4, 0.0));
  std::vector<double> b = {1.5, -2.0, 3.0, 0.25, 7.0};
  const auto expect = b;
  lu.solve(b);
  EXPECT_EQ(b, expect);
}

TEST(TridiagonalLU, ThreeByThree) {
  TridiagonalLU lu({-1, -1}, {2, 2, 2}, {-1, -1});
  std::vector<double> b = {1, 0, 1};
  lu.solve(b);
  for (double x : b) EXPECT_NEAR(x, 1.0, 1e-15);
  // Dense oracle for the same system.
  const Eigen::VectorXd x = dense({-1, -1}, {2, 2, 2}, {-1, -1}).lu().solve(Eigen::Vector3d(1, 0, 1));
  EXPECT_LT((x - to_eigen(b)).norm(), 1e-15);
}

TEST(TridiagonalLU, RandomAgainstDense) {
  std::mt19937_64 rng(42);
  for (std::size_t n : {1u, 2u, 3u, 7u, 20u, 50u}) {
    for (bool dominant : {true, false}) {
      if (n == 1 && !dominant) continue;
      const Bands b = random_bands(std::max<std::size_t>(n, 1), rng, dominant);
      const Eigen::MatrixXd M = dense(b.lo, b.d, b.up);
      std::vector<double> rhs(n);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (auto& x : rhs) x = u(rng);
      const Eigen::VectorXd r0 = to_eigen(rhs);
      TridiagonalLU lu(b.lo, b.d, b.up);
      lu.solve(rhs);
      const Eigen::VectorXd x = to_eigen(rhs);
      const Eigen::VectorXd ref = M.fullPivLu().solve(r0);
      if (dominant) EXPECT_LE((M * x - r0).norm(), 1e-12 * r0.norm()) << n;
      EXPECT_LE((x - ref).norm(), 1e-9 * ref.norm()) << n << " dominant=" << dominant;
    }
  }
}

TEST(TridiagonalLU, PivotsOnZeroLeadingDiagonal) {
  // Leading zero diagonal forces a row interchange.
  TridiagonalLU lu({1, 1}, {0, 0, 1}, {1, 1});
  std::vector<double> b = {1, 2, 3};
  const Eigen::VectorXd ref = dense({1, 1}, {0, 0, 1}, {1, 1}).lu().solve(Eigen::Vector3d(1, 2, 3));
  lu.solve(b);
  EXPECT_LT((to_eigen(b) - ref).norm(), 1e-14);
}

TEST(TridiagonalLU, SingularReportsBlockAndPivot) {
  try {
    // Rows 0 and 1 coincide: elimination leaves a zero pivot at index 1.
    TridiagonalLU lu({1, 0}, {1, 1, 1}, {1, 0}, 7);
    FAIL() << "expected SingularMatrixError";
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.block(), 7u);
    EXPECT_EQ(e.pivot(), 1u);
  }
  EXPECT_THROW(TridiagonalLU({}, {0.0}, {}), SingularMatrixError);
  EXPECT_THROW(TridiagonalLU({1}, {1, 1}, {}), std::invalid_argument);
}

TEST(ImplicitJacobian, PartitionChecks) {
  ImplicitJacobian j = ImplicitJacobian::zero(4);
  EXPECT_NO_THROW(j.check_partition());
  j.dimension = 5;
  EXPECT_THROW(j.check_partition(), std::invalid_argument);
  j.dimension = 3;
  EXPECT_THROW(j.check_partition(), std::invalid_argument);

  ImplicitJacobian overlap;
  overlap.dimension = 3;
  overlap.blocks.emplace_back(TridiagonalBlock{0, {0.0}, {0.0, 0.0}, {0.0}});
  overlap.blocks.emplace_back(TridiagonalBlock{1, {0.0}, {0.0, 0.0}, {0.0}});
  EXPECT_THROW(overlap.check_partition(), std::invalid_argument);
}

namespace {

ImplicitJacobian mixed_jacobian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ImplicitJacobian j;
  j.dimension = 3 + 2 * 6 + 1;
  TridiagonalBlock t{0, {u(rng), u(rng)}, {u(rng), u(rng), u(rng)}, {u(rng), u(rng)}};
  PairedBlock p;
  p.offset = 3;
  for (int k = 0; k < 6; ++k) {
    p.coupling.push_back(1.0 + 0.5 * u(rng));
    p.diag.push_back(-2.0 + 0.3 * u(rng));
  }
  for (int k = 0; k < 5; ++k) {
    p.lower.push_back(1.0 + 0.2 * u(rng));
    p.upper.push_back(1.0 + 0.2 * u(rng));
  }
  TridiagonalBlock last{15, {}, {u(rng)}, {}};
  j.blocks = {t, p, last};
  return j;
}

}  // namespace

TEST(ImplicitJacobian, DenseFormMatchesApply) {
  std::mt19937_64 rng(3);
  const ImplicitJacobian j = mixed_jacobian(rng);
  const Eigen::MatrixXd J = j.to_dense();
  // Paired block structure: p rows only see their own s, s rows only p.
  EXPECT_EQ(J(3, 3), 0.0);
  EXPECT_NE(J(3, 4), 0.0);
  EXPECT_EQ(J(3, 5), 0.0);
  EXPECT_NE(J(4, 5), 0.0);
  std::vector<double> v(j.dimension), out(j.dimension);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& x : v) x = u(rng);
  j.apply(v, out);
  EXPECT_LT((J * to_eigen(v) - to_eigen(out)).norm(), 1e-14);
}

TEST(ShiftedSystem, MatchesDenseSolve) {
  std::mt19937_64 rng(5);
  const ImplicitJacobian j = mixed_jacobian(rng);
  const auto n = static_cast<Eigen::Index>(j.dimension);
  for (double gamma : {0.0, 0.1, 0.32591194130117247, 3.0}) {
    const Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n) - gamma * j.to_dense();
    std::vector<double> rhs(j.dimension);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& x : rhs) x = u(rng);
    const Eigen::VectorXd r0 = to_eigen(rhs);
    ShiftedSystem(j, gamma).solve(rhs);
    const Eigen::VectorXd x = to_eigen(rhs);
    EXPECT_LE((M * x - r0).norm(), 1e-12 * r0.norm()) << gamma;
  }
}

TEST(ShiftedSystem, SingularBlockNamesTheBlock) {
  ImplicitJacobian j;
  j.dimension = 3;
  j.blocks.emplace_back(TridiagonalBlock{0, {}, {0.0}, {}});
  j.blocks.emplace_back(TridiagonalBlock{1, {0.0}, {1.0, 0.5}, {0.0}});
  try {
    ShiftedSystem s(j, 1.0);
    FAIL() << "expected SingularMatrixError";
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.block(), 1u);
    EXPECT_EQ(e.pivot(), 0u);
  }
}
