#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/kernels.hpp"

using namespace stieltjes;

namespace {

XReal omega_direct(const XReal& y) { return 1 / (1 - y) + 1 / log(y); }

}  // namespace

TEST(Kernels, OmegaEndpoints) {
  const Bits p{256};
  XReal tiny = ldexp(XReal(1L, p), -200);
  EXPECT_LT(abs(omega_kernel(tiny) - 1).to_double(), 1e-2);
  XReal c = ldexp(XReal(1L, p), -300);
  EXPECT_LT(abs(omega_kernel(1 - c, c) - XReal(mpq_class(1, 2), p)).to_double(), 1e-80);
}

TEST(Kernels, OmegaDomain) {
  const Bits p{128};
  EXPECT_THROW(omega_kernel(XReal(0L, p)), DomainError);
  EXPECT_THROW(omega_kernel(XReal(1L, p)), DomainError);
  EXPECT_THROW(bose_kernel(XReal(0L, p)), DomainError);
  EXPECT_THROW(loglog_power_kernel(XReal(mpq_class(1, 2), p), -1), DomainError);
}

TEST(KernelsProperty, OmegaMatchesDirectAtHigherPrecision) {
  std::mt19937_64 rng(11);
  const Bits p{256}, w{1024};
  for (int i = 0; i < 100; ++i) {
    XReal y = oracle::random_unit(rng, p, 1e-9, 1 - 1e-9);
    XReal ref = omega_direct(y.rounded(w));
    EXPECT_TRUE(abs(omega_kernel(y) - ref) <= abs(ref) * epsilon(p) * 64);
  }
}

TEST(KernelsProperty, OmegaNearOneUsesComplement) {
  const Bits p{256}, w{2048};
  for (long k = 20; k <= 200; k += 15) {
    XReal c = ldexp(XReal(3L, p), -k);
    XReal ref = omega_direct(1 - c.rounded(w));
    EXPECT_TRUE(abs(omega_kernel(1 - c, c) - ref) <= epsilon(p) * 64) << k;
  }
}

TEST(KernelsProperty, OmegaIncreasingFromHalfToOne) {
  std::mt19937_64 rng(5);
  const Bits p{128};
  for (int i = 0; i < 100; ++i) {
    XReal a = oracle::random_unit(rng, p, 1e-6, 1 - 1e-6), b = oracle::random_unit(rng, p, 1e-6, 1 - 1e-6);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    XReal oa = omega_kernel(a), ob = omega_kernel(b);
    EXPECT_TRUE(oa >= ob);
    EXPECT_TRUE(ob > XReal(mpq_class(1, 2), p) && oa < 1);
  }
}

TEST(KernelsProperty, BoseMatchesDirectAndStaysInRange) {
  std::mt19937_64 rng(9);
  const Bits p{256}, w{1024};
  for (int i = 0; i < 100; ++i) {
    XReal x = oracle::random_unit(rng, p, 1e-20, 60.0);
    XReal xw = x.rounded(w);
    XReal ref = 1 / expm1(xw) - 1 / xw;
    XReal v = bose_kernel(x);
    EXPECT_TRUE(abs(v - ref) <= abs(ref) * epsilon(p) * 64);
    EXPECT_TRUE(v < 0 && v > XReal(mpq_class(-1, 2), p));
  }
  EXPECT_LT(abs(bose_kernel(ldexp(XReal(1L, p), -100)) + XReal(mpq_class(1, 2), p)).to_double(), 1e-29);
}

TEST(Kernels, LogLogPower) {
  const Bits p{192};
  XReal y(mpq_class(1, 10), p);
  EXPECT_EQ(loglog_power_kernel(y, 0), 1);
  XReal l = log(-log(y));
  EXPECT_TRUE(abs(loglog_power_kernel(y, 3) - l * l * l) <= epsilon(p) * 16);
  XReal c = ldexp(XReal(1L, p), -150);
  XReal lc = log(-log1p(-c.rounded(Bits{1024})));
  EXPECT_TRUE(abs(loglog_power_kernel(1 - c, c, 2) - lc * lc) <= abs(lc * lc) * epsilon(p) * 64);
  EXPECT_TRUE(abs(neg_log(1 - c, c) - c) <= c * c);
}
