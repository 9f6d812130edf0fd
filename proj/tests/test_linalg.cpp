#include <gtest/gtest.h>

#include <random>

#include "cdga/linalg.hpp"

using namespace cdga;
using Q = mpq_class;

namespace {

Matrix<Q> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix<Q> m(r, c, Q(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng) * d(rng) == 0 ? 0 : d(rng);
  return m;
}

}  // namespace

TEST(Linalg, RankOfKnownMatrix) {
  auto m = Matrix<Q>::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3, Q(0));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Linalg, EchelonIsReducedWithLeftmostPivots) {
  auto m = Matrix<Q>::from_rows({{0, 2, 4}, {1, 1, 1}}, 3, Q(0));
  auto e = row_reduce(m);
  ASSERT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.rows(0, 0), 1);
  EXPECT_EQ(e.rows(0, 1), 0);
  EXPECT_EQ(e.rows(0, 2), -1);
  EXPECT_EQ(e.rows(1, 2), 2);
}

TEST(LinalgProperty, KernelAndSolveOnRandomMatrices) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const auto m = random_matrix(rng, r, c);
    const auto k = kernel(m);
    ASSERT_EQ(k.rows() + rank(m), r);
    const auto prod = k * m;
    for (std::size_t i = 0; i < prod.rows(); ++i) ASSERT_TRUE(is_zero_vector(prod.row(i)));
    // A vector in the row space is always solvable, and the solution checks.
    std::vector<Q> x(r);
    for (auto& v : x) v = static_cast<int>(rng() % 5) - 2;
    Matrix<Q> xm(1, r, Q(0));
    xm.set_row(0, x);
    const auto b = (xm * m).row(0);
    const auto sol = solve_left(m, b);
    ASSERT_TRUE(sol.has_value());
    Matrix<Q> sm(1, r, Q(0));
    sm.set_row(0, *sol);
    ASSERT_EQ((sm * m).row(0), b);
    // Transform reproduces the echelon rows.
    const auto e = row_reduce(m, true);
    const auto t = *e.transform * m;
    for (std::size_t i = 0; i < e.rank(); ++i) ASSERT_EQ(t.row(i), e.rows.row(i));
  }
}
