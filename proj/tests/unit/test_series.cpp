#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/series.hpp"

using namespace stieltjes;

TEST(Series, PlainGeometric) {
  const Bits p{256};
  XReal half(mpq_class(1, 2), p);
  auto r = sum_series([&](long n) { return pow(half, n); }, XReal(1e-60, p), Acceleration::none());
  EXPECT_TRUE(r.converged);
  EXPECT_LT(abs(r.value - 2).to_double(), 1e-58);
}

TEST(Series, RichardsonBaselZeta) {
  const Bits p{256};
  auto r = sum_series([&](long n) { return 1 / (XReal(n, p) * n); }, XReal(1e-20, p),
                      Acceleration::richardson(6), SeriesOptions{1, 1L << 20, 16});
  EXPECT_TRUE(r.converged);
  EXPECT_LT(abs(r.value - oracle::zeta(2, p)).to_double(), 1e-18);
}

TEST(Series, BudgetExhaustionThrows) {
  const Bits p{128};
  EXPECT_THROW(sum_series([&](long n) { return 1 / XReal(n, p); }, XReal(1e-20, p), Acceleration::none(),
                          SeriesOptions{1, 1000, 16}),
               NonConvergence);
  EXPECT_THROW(sum_series([&](long) { return XReal(1L, p); }, XReal(0L, p), Acceleration::none()), DomainError);
}

TEST(Series, NevilleIsExactForPolynomials) {
  const Bits p{256};
  std::vector<XReal> h, v;
  for (int k = 1; k <= 5; ++k) {
    XReal x(mpq_class(1, k + 1), p);
    h.push_back(x);
    v.push_back(3 + x * 2 - x * x * 7 + x * x * x * x);
  }
  EXPECT_LT(abs(neville_at_zero(h, v) - 3).to_double(), 1e-70);
}

TEST(SeriesProperty, SolveLinearResidual) {
  std::mt19937_64 rng(3);
  const Bits p{256};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<std::vector<XReal>> a(n);
    std::vector<XReal> b;
    for (auto& row : a) {
      for (int j = 0; j < n; ++j) row.push_back(oracle::random_unit(rng, p, -1, 1));
      b.push_back(oracle::random_unit(rng, p, -1, 1));
    }
    auto x = solve_linear(a, b);
    for (int i = 0; i < n; ++i) {
      XReal s = -b[i];
      for (int j = 0; j < n; ++j) s += a[i][j] * x[j];
      EXPECT_LT(abs(s).to_double(), 1e-60);
    }
  }
}

TEST(SeriesProperty, BinomialMatchesPascal) {
  std::vector<mpz_class> row{1};
  for (long n = 1; n <= 60; ++n) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < next.size(); ++k)
      next[k] = (k < row.size() ? row[k] : mpz_class(0)) + (k > 0 ? row[k - 1] : mpz_class(0));
    row = next;
    for (long k = 0; k <= n; ++k) EXPECT_EQ(binomial_exact(n, k), row[static_cast<std::size_t>(k)]);
  }
  EXPECT_THROW(binomial_exact(3, 4), DomainError);
  EXPECT_EQ(factorial_exact(20), mpz_class("2432902008176640000"));
}

TEST(Series, BernoulliAgainstIndependentRecursion) {
  for (long n = 0; n <= 40; ++n) EXPECT_EQ(bernoulli_number(n), oracle::bernoulli(n)) << n;
}

TEST(Series, BernoulliAgainstZetaAtNegativeIntegers) {
  const Bits p{256};
  for (long n = 2; n <= 30; n += 2) {
    XReal ref = -oracle::zeta(XReal(1 - n, p)) * n;
    EXPECT_LT(abs(XReal(bernoulli_number(n), p) - ref).to_double(), 1e-60) << n;
  }
}

TEST(Series, GregoryCoefficientsInvertLogSeries) {
  // (x / log(1+x)) * (log(1+x) / x) = 1, with log(1+x)/x = sum (-1)^m x^m / (m+1)
  EXPECT_EQ(gregory_coefficient(0), 1);
  EXPECT_EQ(gregory_coefficient(1), mpq_class(1, 2));
  EXPECT_EQ(gregory_coefficient(2), mpq_class(-1, 12));
  for (long n = 1; n <= 25; ++n) {
    mpq_class s = 0;
    for (long k = 0; k <= n; ++k) {
      long m = n - k;
      s += gregory_coefficient(k) * mpq_class(m % 2 ? -1 : 1, m + 1);
    }
    EXPECT_EQ(s, 0) << n;
  }
}
