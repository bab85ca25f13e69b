#include "hamres/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using hamres::Rational;
using hamres::RationalMatrix;

namespace {

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = static_cast<long>(rng() % 7) - 3;
  return m;
}

}  // namespace

TEST(Matrix, RrefSimple) {
  // [[2,4],[1,2]]: second row is half the first.
  const auto result = hamres::rref(RationalMatrix{{2, 4}, {1, 2}});
  EXPECT_EQ(result.matrix, (RationalMatrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(result.pivot_columns, (std::vector<std::size_t>{0}));
}

TEST(Matrix, RrefIdentityFixedPoint) {
  const RationalMatrix eye{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto result = hamres::rref(eye);
  EXPECT_EQ(result.matrix, eye);
  EXPECT_EQ(result.pivot_columns, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Matrix, RrefWorkedExample) {
  // One-hot rows of the vertices 100, 101, 001 of the binary 3-cube.
  const RationalMatrix a{{0, 1, 1, 0, 1, 0},
                         {0, 1, 1, 0, 0, 1},
                         {1, 0, 1, 0, 0, 1}};
  const auto result = hamres::rref(a);
  const RationalMatrix expected{{1, 0, 1, 0, 0, 1},
                                {0, 1, 1, 0, 0, 1},
                                {0, 0, 0, 0, 1, -1}};
  EXPECT_EQ(result.matrix, expected);
  EXPECT_EQ(result.pivot_columns, (std::vector<std::size_t>{0, 1, 4}));
  EXPECT_EQ(hamres::rank(a), 3u);
}

TEST(Matrix, RrefIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    const auto once = hamres::rref(m);
    const auto twice = hamres::rref(once.matrix);
    EXPECT_EQ(once.matrix, twice.matrix);
    EXPECT_EQ(once.pivot_columns, twice.pivot_columns);
  }
}

TEST(Matrix, RankMatchesTranspose) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    EXPECT_EQ(hamres::rank(m), hamres::rank(transpose(m)));
  }
}

TEST(Matrix, FractionalPivots) {
  // Elimination introduces fractions; results stay exact.
  const RationalMatrix m{{2, 3}, {5, 7}};
  const auto result = hamres::rref(m);
  EXPECT_EQ(result.matrix, (RationalMatrix{{1, 0}, {0, 1}}));
}

TEST(Matrix, AppendRow) {
  RationalMatrix m(0, 0);
  m.append_row({Rational(1), Rational(2)});
  m.append_row({Rational(3), Rational(4)});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m.at(1, 0), Rational(3));
  EXPECT_THROW(m.append_row({Rational(1)}), std::invalid_argument);
}
