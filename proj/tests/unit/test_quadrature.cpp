#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/quadrature.hpp"

using namespace stieltjes;

namespace {

const Bits P{256};
XReal tol() { return XReal(1e-60, P); }

}  // namespace

TEST(Quadrature, OmegaIntegralIsEuler) {
  auto r = integrate_unit([](const XReal& y, const XReal& c) { return std::optional(omega_kernel(y, c)); }, tol());
  EXPECT_TRUE(r.converged);
  EXPECT_LT(abs(r.value - oracle::euler(P)).to_double(), 1e-58);
  EXPECT_GT(r.evaluations, 0);
  EXPECT_FALSE(r.level_differences.empty());
}

TEST(Quadrature, LogSquaredOverOneMinusY) {
  auto r = integrate_unit(
      [](const XReal& y, const XReal& c) {
        XReal l = log(y);
        return std::optional(l * l / c);
      },
      tol());
  EXPECT_LT(abs(r.value - oracle::zeta(3, P) * 2).to_double(), 1e-58);
}

TEST(Quadrature, LogLogIsMinusEuler) {
  auto r = integrate_unit([](const XReal& y, const XReal& c) { return std::optional(log(neg_log(y, c))); }, tol());
  EXPECT_LT(abs(r.value + oracle::euler(P)).to_double(), 1e-58);
}

TEST(Quadrature, InverseSquareRootSingularity) {
  auto r = integrate_unit([](const XReal& y, const XReal&) { return std::optional(1 / sqrt(y)); }, tol());
  EXPECT_LT(abs(r.value - 2).to_double(), 1e-58);
}

TEST(QuadratureProperty, RandomPolynomials) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<XReal> a;
    XReal exact(0L, P);
    for (int k = 0; k <= 8; ++k) {
      a.push_back(oracle::random_unit(rng, P, -3, 3));
      exact += a.back() / (k + 1);
    }
    auto r = integrate_unit(
        [&](const XReal& y, const XReal&) {
          XReal s(0L, P);
          for (std::size_t k = a.size(); k-- > 0;) s = s * y + a[k];
          return std::optional(s);
        },
        tol());
    EXPECT_LT(abs(r.value - exact).to_double(), 1e-58);
  }
}

TEST(Quadrature, HalfLineMoments) {
  XReal g = oracle::euler(P);
  auto r = integrate_halfline(
      [](const XReal& t) {
        XReal l = log(t);
        return std::optional(exp(-t) * l * l);
      },
      tol());
  EXPECT_LT(abs(r.value - g * g - oracle::zeta(2, P)).to_double(), 1e-58);
  auto b = integrate_halfline([](const XReal& x) { return std::optional(bose_kernel(x) * exp(-x)); }, tol());
  EXPECT_LT(abs(b.value - g + 1).to_double(), 1e-58);
}

TEST(Quadrature, HalfLineAlgebraicTail) {
  auto r = integrate_halfline(
      [](const XReal& x) {
        XReal d = x + 1;
        return std::optional(1 / (d * d));
      },
      XReal(1e-40, P));
  EXPECT_TRUE(r.converged);
  EXPECT_LT(abs(r.value - 1).to_double(), 1e-38);
}

TEST(Quadrature, DivergentIntegrandIsFlagged) {
  auto f = [](const XReal&, const XReal& c) { return std::optional(1 / c); };
  QuadOptions o;
  o.throw_on_failure = false;
  auto r = integrate_unit(f, XReal(1e-30, P), o);
  EXPECT_FALSE(r.converged);
  EXPECT_THROW(integrate_unit(f, XReal(1e-30, P)), NonConvergence);
}

TEST(Quadrature, ExcludedPointsAndNonFiniteValues) {
  auto r = integrate_unit(
      [](const XReal& y, const XReal&) -> std::optional<XReal> {
        if (y < XReal(1e-30, P)) return std::nullopt;
        return y;
      },
      XReal(1e-40, P));
  EXPECT_LT(abs(r.value - XReal(mpq_class(1, 2), P)).to_double(), 1e-38);
  EXPECT_THROW(integrate_unit([](const XReal& y, const XReal&) { return std::optional(y / XReal(0L, P)); },
                              XReal(1e-20, P)),
               DomainError);
}

TEST(Quadrature, ConcurrentCallersAgree) {
  const Bits p{320};
  std::vector<XReal> out(4, XReal(0L, p));
  std::vector<std::thread> ts;
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&, i] {
      out[i] = integrate_unit([](const XReal& y, const XReal& c) { return std::optional(omega_kernel(y, c)); },
                              XReal(1e-80, p))
                   .value;
    });
  for (auto& t : ts) t.join();
  for (int i = 1; i < 4; ++i) EXPECT_EQ(out[i], out[0]);
  EXPECT_LT(abs(out[0] - oracle::euler(p)).to_double(), 1e-78);
}
