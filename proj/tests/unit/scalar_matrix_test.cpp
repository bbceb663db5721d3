#include <gtest/gtest.h>

#include <random>

#include "extline/matrix.hpp"

using namespace extline;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(dist(rng));
  return m;
}

}  // namespace

TEST(FieldSpec, RejectsComposites) {
  EXPECT_THROW(FieldSpec(4), std::invalid_argument);
  EXPECT_THROW(FieldSpec(1), std::invalid_argument);
  EXPECT_NO_THROW(FieldSpec(0));
  EXPECT_NO_THROW(FieldSpec(7));
}

TEST(Scalar, ExactInverses) {
  for (std::uint32_t p : {0u, 2u, 3u, 5u, 101u}) {
    FieldSpec f(p);
    for (int v = -20; v <= 20; ++v) {
      const Scalar a = f.from_int(v);
      EXPECT_TRUE((a + (-a)).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one()) << p << " " << v;
    }
  }
}

TEST(Scalar, RationalsReduce) {
  const Scalar a = Scalar::rational(6, -4);
  EXPECT_EQ(a, Scalar::rational(-3, 2));
  EXPECT_EQ(a.to_string(), "-3/2");
}

TEST(Scalar, MixedCharacteristicThrows) {
  EXPECT_THROW((void)(FieldSpec(2).one() + FieldSpec(3).one()), std::logic_error);
}

TEST(Matrix, KernelAndRankNullity) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {0u, 2u, 3u}) {
    FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Matrix m = random_matrix(f, 1 + trial % 5, 1 + (trial * 3) % 6, rng);
      const Matrix k = kernel(m);
      EXPECT_TRUE((m * k).is_zero());
      EXPECT_EQ(rank(m) + k.cols(), m.cols());
      EXPECT_EQ(rank(k), k.cols());
    }
  }
}

TEST(Matrix, SolveAndInverse) {
  std::mt19937 rng(11);
  FieldSpec f(0);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_matrix(f, 4, 4, rng);
    const Matrix x = random_matrix(f, 4, 2, rng);
    const Matrix b = a * x;
    auto sol = solve(a, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(a * *sol, b);
    if (rank(a) == 4) {
      auto inv = inverse(a);
      ASSERT_TRUE(inv);
      EXPECT_EQ(a * *inv, Matrix::identity(f, 4));
    } else {
      EXPECT_FALSE(inverse(a));
    }
  }
}

TEST(Matrix, UnsolvableSystem) {
  FieldSpec f(2);
  Matrix a(f, 2, 1);
  a(0, 0) = f.one();
  Matrix b(f, 2, 1);
  b(1, 0) = f.one();
  EXPECT_FALSE(solve(a, b));
  EXPECT_THROW(coordinates(a, b), std::domain_error);
}

TEST(Matrix, ColumnSpaceSpansOriginal) {
  std::mt19937 rng(3);
  FieldSpec f(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(f, 5, 4, rng);
    const Matrix c = column_space(m);
    EXPECT_EQ(c.cols(), rank(m));
    EXPECT_TRUE(spans_contain(c, m));
    EXPECT_EQ(c * coordinates(c, m), m);
  }
}
