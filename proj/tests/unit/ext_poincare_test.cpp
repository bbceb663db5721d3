#include <gtest/gtest.h>

#include "extline/ext_poincare.hpp"
#include "extline/quiver_modules.hpp"

using namespace extline;

namespace {

IntPolynomial poly(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

}  // namespace

TEST(IntPolynomial, ArithmeticAndPrinting) {
  const IntPolynomial a = poly({1, 0, 1});
  const IntPolynomial b = poly({0, 1});
  EXPECT_EQ(a * b, poly({0, 1, 0, 1}));
  EXPECT_EQ(a - a, IntPolynomial());
  EXPECT_EQ(a.reflected(5), poly({0, 0, 0, 1, 0, 1}));
  EXPECT_EQ(poly({1, 0, 1, 1}).to_string(), "1 + t^2 + t^3");
  EXPECT_EQ(poly({1, 0, 0, 0, -1}).to_string(), "1 - t^4");
  EXPECT_EQ(poly({0, 0, 1}).to_latex(), "t^{2}");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
}

TEST(Poincare, QPolynomialExamples) {
  EXPECT_EQ(q_polynomial(2, 1, 1), poly({1}));
  EXPECT_EQ(q_polynomial(3, 2, 2), poly({1, 0, 1}));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(q_polynomial(n, 1, n), IntPolynomial::monomial(n - 1));
  EXPECT_THROW(q_polynomial(3, 0, 1), std::out_of_range);
}

TEST(Poincare, NumeratorExamples) {
  EXPECT_EQ(poincare_numerator(2, 1, 1), poly({1, 0, 0, 1}));
  EXPECT_EQ(poincare_denominator(2), poly({1, 0, 0, 0, -1}));
  EXPECT_EQ(poincare_numerator(3, 2, 2), poly({1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(poincare_numerator(3, 1, 3), poly({0, 0, 1, 1}));
}

TEST(Poincare, SeriesExamples) {
  EXPECT_EQ(poincare_series(1, 1, 1, 6), (std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(poincare_series(2, 1, 1, 7), (std::vector<std::int64_t>{1, 0, 0, 1, 1, 0, 0, 1}));
  const auto s = poincare_series(3, 1, 3, 24);
  for (int k = 0; k <= 24; ++k) EXPECT_EQ(s[k], (k % 6 == 2 || k % 6 == 3) ? 1 : 0) << k;
}

TEST(Poincare, SeriesExpansionRoundTrips) {
  // (num / den) * den recovers num up to the truncation
  const IntPolynomial num = poly({2, -1, 0, 3});
  const IntPolynomial den = poly({1, 1, 0, -2});
  const auto c = series_expand(num, den, 12);
  const IntPolynomial prod = IntPolynomial(c) * den;
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(prod.coefficient(k), num.coefficient(k));
  EXPECT_THROW(series_expand(num, poly({2, 1}), 3), std::invalid_argument);
}

TEST(ExtRoutes, XModuleExamples) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        EXPECT_EQ(ext_dim_via_x(n, i, j, 0), i == j ? 1 : 0);
        for (int k = 0; k <= 2 * n; ++k) EXPECT_EQ(ext_dim_via_x(n, i, j, k), ext_dim_via_x(n, i, j, k + 2 * n));
      }
  EXPECT_EQ(ext_dim_via_x(3, 2, 2, 2), 1);
}

TEST(ExtRoutes, ResolutionExamples) {
  LineAlgebra alg(2, FieldSpec(2));
  const PeriodicComplex r = build_resolution(alg, 1);
  EXPECT_EQ(ext_dim_via_resolution(r, 1, 3), 1);
  EXPECT_EQ(ext_dim_via_resolution(r, 2, 1), 1);
  EXPECT_EQ(ext_dim_via_resolution(r, 1, 0), 1);
  EXPECT_EQ(ext_dim_via_resolution(r, 2, 0), 0);
  EXPECT_THROW(ext_dim_via_resolution(r, 1, 9), std::out_of_range);
}

TEST(ExtTable, RoutesAgree) {
  for (int n = 1; n <= 6; ++n) {
    const ExtTable t = ext_table(n, 4 * n);
    EXPECT_EQ(t.routes.size(), 3u);
  }
}

TEST(ExtTable, AgreesWithSyzygyOracle) {
  for (int n = 1; n <= 4; ++n) {
    const ExtTable t = ext_table(n, 4 * n);
    LineAlgebra alg(n, FieldSpec(3));
    for (int i = 1; i <= n; ++i) {
      QuiverRep om = simple_module(alg, i);
      for (int k = 0; k <= 4 * n; ++k) {
        for (int j = 1; j <= n; ++j)
          EXPECT_EQ(static_cast<std::size_t>(t.at(i, j, k)), hom_space(om, simple_module(alg, j)).size());
        om = syzygy(alg, om);
      }
    }
  }
}

TEST(ExtTable, StructuralProperties) {
  for (int n = 1; n <= 6; ++n) {
    const int period = 2 * n;
    const ExtTable t = ext_table(n, 4 * n);
    LineAlgebra alg(n, FieldSpec(2));
    for (int i = 1; i <= n; ++i) {
      const PeriodicComplex r = build_resolution(alg, i);
      for (int k = 0; k <= 4 * n; ++k) {
        int row_sum = 0;
        for (int j = 1; j <= n; ++j) row_sum += t.at(i, j, k);
        EXPECT_EQ(row_sum, static_cast<int>(r.term(k).size()));
      }
      for (int j = 1; j <= n; ++j) {
        IntPolynomial low, full;
        int parity = -1;
        for (int k = 0; k <= 4 * n; ++k) {
          const int e = t.at(i, j, k);
          EXPECT_TRUE(e == 0 || e == 1);
          EXPECT_EQ(e, t.at(j, i, k));
          if (k + period <= 4 * n) EXPECT_EQ(e, t.at(i, j, k + period));
          if (k < n && e == 1) {
            if (parity < 0) parity = k % 2;
            EXPECT_EQ(k % 2, parity);
            low = low + IntPolynomial::monomial(k);
          }
          if (k < period && e == 1) full = full + IntPolynomial::monomial(k);
        }
        EXPECT_EQ(low, q_polynomial(n, i, j));
        EXPECT_EQ(full, q_polynomial(n, i, j) + IntPolynomial::monomial(n) * q_polynomial(n, n + 1 - i, j));
        EXPECT_EQ(q_polynomial(n, n + 1 - i, j), q_polynomial(n, i, j).reflected(n - 1));
      }
    }
  }
}
