#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/zeta.hpp"

using namespace stieltjes;

namespace {

const Bits P{256};

void expect_rel(const XReal& v, const XReal& ref, double tol) {
  XReal scale = max(abs(ref), XReal(1L, ref.precision()));
  EXPECT_LT((abs(v - ref) / scale).to_double(), tol) << v.to_string(40) << " vs " << ref.to_string(40);
}

}  // namespace

TEST(Zeta, RiemannAgainstMpfr) {
  for (long s = 2; s <= 40; ++s) expect_rel(riemann_zeta(s, P), oracle::zeta(s, P), 1e-70);
  EXPECT_THROW(riemann_zeta(1, P), DomainError);
}

TEST(Zeta, HurwitzAtIntegersAndHalf) {
  for (long s = 2; s <= 8; ++s) {
    for (long x = 1; x <= 5; ++x) expect_rel(hurwitz_zeta(s, XReal(x, P)), oracle::hurwitz(s, x, P), 1e-70);
    expect_rel(hurwitz_zeta(s, XReal(mpq_class(1, 2), P)), oracle::hurwitz(s, mpq_class(1, 2), P), 1e-70);
  }
}

TEST(ZetaProperty, HurwitzShift) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 40; ++i) {
    XReal x = oracle::random_unit(rng, P, 0.05, 30);
    for (long s = 2; s <= 4; ++s)
      expect_rel(hurwitz_zeta(s, x), hurwitz_zeta(s, x + 1) + pow(x, -s), 1e-70);
  }
}

TEST(Zeta, Derivatives) {
  expect_rel(zeta_prime_2(P), oracle::zeta_derivative(2, P), 1e-50);
  expect_rel(zeta_prime_minus_one(P), oracle::zeta_derivative(-1, P), 1e-50);
  expect_rel(hurwitz_zeta_ds(2, XReal(1L, P)), oracle::zeta_derivative(2, P), 1e-50);
  expect_rel(hurwitz_zeta_ds(3, XReal(1L, P)), oracle::zeta_derivative(3, P), 1e-50);
  // d/ds zeta(s, 2) = zeta'(s) + 0 - d/ds 1^-s = zeta'(s)
  expect_rel(hurwitz_zeta_ds(3, XReal(2L, P)), oracle::zeta_derivative(3, P), 1e-50);
}

TEST(GammaFns, EulerConstant) { expect_rel(euler_gamma(P), oracle::euler(P), 1e-74); }

TEST(GammaFnsProperty, DigammaLogGammaGamma) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 60; ++i) {
    XReal x = oracle::random_unit(rng, P, 0.01, 60);
    expect_rel(digamma(x), oracle::digamma(x), 1e-70);
    expect_rel(log_gamma(x), oracle::lngamma(x), 1e-70);
    if (x < 40) expect_rel(gamma(x), oracle::gamma(x), 1e-70);
  }
  EXPECT_THROW(digamma(XReal(0L, P)), DomainError);
}

TEST(GammaFns, PolygammaSpecialValues) {
  XReal pi2 = oracle::pi(P) * oracle::pi(P);
  expect_rel(polygamma(1, XReal(1L, P)), oracle::zeta(2, P), 1e-70);
  expect_rel(polygamma(1, XReal(mpq_class(1, 2), P)), pi2 / 2, 1e-70);
  expect_rel(polygamma(2, XReal(1L, P)), -oracle::zeta(3, P) * 2, 1e-70);
  EXPECT_THROW(polygamma(0, XReal(1L, P)), DomainError);
}

TEST(GammaFns, DerivativesAgainstTaylorFit) {
  for (XReal x : {XReal(1L, P), XReal(mpq_class(1, 2), P), XReal(mpq_class(7, 3), P)})
    for (int m = 0; m <= 5; ++m) expect_rel(gamma_derivative(m, x), oracle::gamma_derivative(m, x), 1e-25);
}

TEST(GammaFns, ClosedFormsAtOne) {
  XReal g = oracle::euler(P), z2 = oracle::zeta(2, P), z3 = oracle::zeta(3, P), one(1L, P);
  expect_rel(gamma_derivative(1, one), -g, 1e-70);
  expect_rel(gamma_derivative(2, one), z2 + g * g, 1e-70);
  expect_rel(gamma_derivative(3, one), -(z3 * 2 + g * z2 * 3 + g * g * g), 1e-70);
}

TEST(GammaFns, SignLawAtOne) {
  for (long m = 0; m <= 16; ++m) EXPECT_EQ(gamma_derivative(m, XReal(1L, P)).sign(), m % 2 ? -1 : 1) << m;
}

TEST(GammaFns, LogGammaInteger) {
  for (long t = 1; t <= 50; t += 7) expect_rel(log_gamma_integer(t, P), oracle::lngamma(XReal(t + 1, P)), 1e-70);
  EXPECT_THROW(log_gamma_integer(0, P), DomainError);
}
