#include <set>

#include "stieltjes/audit.hpp"
#include "stieltjes/coppo.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/hasse.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/polylog.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/series.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {

namespace {

using M = Module;

XReal num(EvalContext& c, const mpq_class& v) { return XReal(v, c.prec); }
XReal num(EvalContext& c, long v) { return XReal(v, c.prec); }

Estimate closed(XReal v) {
  XReal e(v.precision());
  return {std::move(v), std::move(e), 0};
}

Estimate from_quad(const QuadResult& q) { return {q.value, q.error_estimate, q.evaluations}; }

Estimate unit(EvalContext& c, const UnitIntegrand& f) {
  return from_quad(integrate_unit(f, audit_quadrature_tolerance(c.prec)));
}

Estimate half(EvalContext& c, const HalfLineIntegrand& f) {
  return from_quad(integrate_halfline(f, audit_quadrature_tolerance(c.prec)));
}

std::string str(const mpq_class& v) { return v.get_str(); }
std::string str(long v) { return std::to_string(v); }

std::string tag(const mpq_class& v) {
  std::string s = v.get_str();
  for (char& ch : s)
    if (ch == '/') ch = 'o';
  return s;
}

// sum_j C(n,j) (-1)^j f(j)
XReal alt_binomial(EvalContext& c, long n, const std::function<XReal(long)>& f) {
  XReal s(c.prec);
  for (long j = 0; j <= n; ++j) {
    XReal t = XReal(binomial_exact(n, j), c.prec) * f(j);
    if (j % 2 == 0) s += t; else s -= t;
  }
  return s;
}

// Sum of two estimates with summed errors.
Estimate plus(Estimate a, const Estimate& b) {
  a.value += b.value;
  a.error += b.error;
  a.work += b.work;
  return a;
}

Estimate scaled(Estimate a, const XReal& k) {
  a.value *= k;
  a.error *= abs(k);
  return a;
}

// gamma_k(x) + log^(k+1) x / (k+1), the bracket of the Coppo-type sums.
Estimate shifted_stieltjes(EvalContext& c, long k, const mpq_class& x) {
  Estimate g = c.pool.stieltjes(k, x);
  if (x != 1) g.value += pow(log(num(c, x)), k + 1) / (k + 1);
  return g;
}

// sum_k C(n,k) (-1)^k Gamma^(n-k)(1) [gamma_k(x) + log^(k+1) x/(k+1)]
Estimate coppo_combination(EvalContext& c, long n, const mpq_class& x) {
  Estimate s = closed(XReal(c.prec));
  for (long k = 0; k <= n; ++k) {
    XReal w = XReal(binomial_exact(n, k), c.prec) * c.pool.gamma_derivative_at_1(n - k);
    if (k % 2 != 0) w = -w;
    s = plus(s, scaled(shifted_stieltjes(c, k, x), w));
  }
  return s;
}

// int_0^1 Omega(y) y^(u-1) log^n|log y| dy
Estimate omega_moment(EvalContext& c, const mpq_class& u, int n) {
  if (u == 1) {
    Estimate d = c.pool.dn(n);
    if (n % 2 != 0) d.value = -d.value;
    return d;
  }
  XReal um1 = num(c, u - 1);
  return unit(c, [=](const XReal& y, const XReal& yc) {
    XReal l = neg_log(y, yc);
    return omega_kernel(y, yc) * exp(-um1 * l) * loglog_power_kernel(y, yc, n);
  });
}

struct Registry {
  std::vector<IdentityCase> cases;

  IdentityCase& add(std::string id, Family f, std::string anchor) {
    IdentityCase c;
    c.id = std::move(id);
    c.family = f;
    c.anchor = std::move(anchor);
    c.tolerance = 1e-10;
    cases.push_back(std::move(c));
    return cases.back();
  }
  IdentityCase& rig(std::string id, std::string anchor) {
    return add(std::move(id), Family::Rigorous, std::move(anchor));
  }
  IdentityCase& audit(std::string id, std::string anchor) {
    auto& c = add(std::move(id), Family::Section2Audit, std::move(anchor));
    c.tolerance = 1e-6;
    return c;
  }
};

void binomial_cases(Registry& r) {
  struct T { mpq_class u, p; long n; };
  for (const T& t : {T{1, 2, 3}, T{2, mpq_class(3, 2), 2}, T{mpq_class(1, 2), 3, 4}}) {
    auto& c = r.rig("EQ_1_1_u" + tag(t.u) + "_p" + tag(t.p) + "_n" + str(t.n),
                    "Laplace transform of (1-e^-x)^n x^(p-1)");
    c.params = {{"u", str(t.u)}, {"p", str(t.p)}, {"n", str(t.n)}};
    c.lhs = [t](EvalContext& ctx) {
      XReal u = num(ctx, t.u), pm1 = num(ctx, t.p - 1);
      return half(ctx, [=](const XReal& x) {
        return exp(-u * x) * pow(-expm1(-x), t.n) * pow(x, pm1);
      });
    };
    c.rhs = [t](EvalContext& ctx) {
      XReal p = num(ctx, t.p);
      XReal s = alt_binomial(ctx, t.n, [&](long j) { return pow(num(ctx, t.u + j), -p); });
      return closed(gamma(p) * s);
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma};
  }

  for (long rr = 1; rr <= 3; ++rr)
    for (long u = 1; u <= 2; ++u)
      for (long n = rr; n <= 3; ++n) {
        auto& c = r.rig("EQ_1_2_r" + str(rr) + "_u" + str(u) + "_n" + str(n),
                        "half-line binomial integral against x^r");
        c.params = {{"r", str(rr)}, {"u", str(u)}, {"n", str(n)}};
        c.lhs = [=](EvalContext& ctx) {
          return half(ctx, [=](const XReal& x) {
            return exp(-x * u) * pow(-expm1(-x), n) / pow(x, rr);
          });
        };
        c.rhs = [=](EvalContext& ctx) {
          XReal s = alt_binomial(ctx, n, [&](long j) {
            XReal a = num(ctx, u + j);
            return pow(a, rr - 1) * log(a);
          });
          s /= XReal(factorial_exact(rr - 1), ctx.prec);
          return closed(rr % 2 == 0 ? s : -s);
        };
        c.lhs_deps = {M::Quadrature};
        c.rhs_deps = {M::PrecisionCore};
      }

  for (long n = 1; n <= 3; ++n) {
    auto& c = r.rig("EQ_1_3_n" + str(n), "half-line binomial integral against 1/x");
    c.params = {{"n", str(n)}};
    c.lhs = [=](EvalContext& ctx) {
      return half(ctx, [=](const XReal& x) { return exp(-x) * pow(-expm1(-x), n) / x; });
    };
    c.rhs = [=](EvalContext& ctx) {
      return closed(-alt_binomial(ctx, n, [&](long j) { return log(num(ctx, 1 + j)); }));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::PrecisionCore};
  }

  for (long n = 1; n <= 3; ++n) {
    auto& c = r.rig("EQ_1_4_n" + str(n), "unit-interval binomial integral against 1/log y");
    c.params = {{"n", str(n)}};
    c.lhs = [=](EvalContext& ctx) {
      return unit(ctx, [=](const XReal& y, const XReal& yc) {
        return -pow(yc, n) / neg_log(y, yc);
      });
    };
    c.rhs = [=](EvalContext& ctx) {
      return closed(alt_binomial(ctx, n, [&](long j) { return log(num(ctx, 1 + j)); }));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::PrecisionCore};
  }

  for (long rr = 1; rr <= 3; ++rr)
    for (long u = 1; u <= 2; ++u)
      for (long n = rr; n <= 3; ++n) r.cases.push_back(binomial_log_power_case(rr, u, n));
}

void digamma_cases(Registry& r) {
  for (const mpq_class& u : {mpq_class(1, 2), mpq_class(2), mpq_class(3)}) {
    auto& c = r.rig("EQ_1_10_u" + tag(u), "Binet integral of Omega against y^(u-1)");
    c.params = {{"u", str(u)}};
    c.lhs = [u](EvalContext& ctx) { return omega_moment(ctx, u, 0); };
    c.rhs = [u](EvalContext& ctx) {
      XReal x = num(ctx, u);
      return closed(log(x) - digamma(x));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma};
  }

  {
    auto& c = r.rig("EQ_1_11", "Euler constant as the integral of Omega");
    c.lhs = [](EvalContext& ctx) { return closed(ctx.pool.euler_gamma()); };
    c.rhs = [](EvalContext& ctx) { return ctx.pool.dn(0); };
    c.lhs_deps = {M::Constants};
    c.rhs_deps = {M::Quadrature};
  }

  for (const mpq_class& u : {mpq_class(1, 2), mpq_class(2), mpq_class(3)}) {
    auto& c = r.rig("EQ_1_12_u" + tag(u), "Dirichlet integral for the digamma function");
    c.params = {{"u", str(u)}};
    c.lhs = [u](EvalContext& ctx) { return closed(digamma(num(ctx, u))); };
    c.rhs = [u](EvalContext& ctx) {
      XReal um1 = num(ctx, u - 1);
      Estimate e = unit(ctx, [=](const XReal& y, const XReal& yc) {
        // 1/log y + y^(u-1)/(1-y) = Omega(y) - (1 - y^(u-1))/(1-y)
        XReal l = neg_log(y, yc);
        return omega_kernel(y, yc) + expm1(-um1 * l) / yc;
      });
      e.value = -e.value;
      return e;
    };
    c.lhs_deps = {M::ZetaGamma};
    c.rhs_deps = {M::Quadrature};
  }

  for (const mpq_class& u : {mpq_class(1, 2), mpq_class(2), mpq_class(3)}) {
    auto& c = r.rig("EQ_1_13_u" + tag(u), "Frullani integral for log u");
    c.params = {{"u", str(u)}};
    c.lhs = [u](EvalContext& ctx) { return closed(log(num(ctx, u))); };
    c.rhs = [u](EvalContext& ctx) {
      XReal um1 = num(ctx, u - 1);
      return unit(ctx, [=](const XReal& y, const XReal& yc) {
        XReal l = neg_log(y, yc);
        return -expm1(-um1 * l) / l;
      });
    };
    c.lhs_deps = {M::PrecisionCore};
    c.rhs_deps = {M::Quadrature};
  }

  for (const mpq_class& u : {mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
    auto& c = r.rig("EQ_1_14_u" + tag(u), "Binet-type Laplace transform of the Bose kernel");
    c.params = {{"u", str(u)}};
    c.lhs = [u](EvalContext& ctx) {
      XReal x = num(ctx, u);
      return half(ctx, [=](const XReal& t) { return bose_kernel(t) * exp(-x * t); });
    };
    c.rhs = [u](EvalContext& ctx) {
      XReal x = num(ctx, u);
      return closed(log(x) - digamma(x + 1));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma};
  }

  for (long t : {1L, 2L, 3L}) {
    auto& c = r.rig("EQ_1_15_t" + str(t), "Binet-type integral for log Gamma(1+t)");
    c.params = {{"t", str(t)}};
    c.lhs = [t](EvalContext& ctx) {
      return half(ctx, [=](const XReal& x) { return bose_kernel(x) * -expm1(-x * t) / x; });
    };
    c.rhs = [t](EvalContext& ctx) {
      XReal tt = num(ctx, t);
      return closed(tt * log(tt) - tt - log_gamma_integer(t, ctx.prec));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma};
  }

  for (long t : {2L, 3L, 5L}) {
    auto& c = r.rig("EQ_1_16_t" + str(t), "Binet-type integral for log Gamma(1+t), shifted kernel");
    c.params = {{"t", str(t)}};
    c.lhs = [t](EvalContext& ctx) {
      return half(ctx, [=](const XReal& x) {
        return bose_kernel(x) * exp(-x) * -expm1(-x * (t - 1)) / x;
      });
    };
    c.rhs = [t](EvalContext& ctx) {
      XReal tt = num(ctx, t);
      return closed(tt * log(tt) - tt + 1 - log_gamma_integer(t, ctx.prec));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma};
  }

  for (const mpq_class& u : {mpq_class(1), mpq_class(2), mpq_class(3, 2)}) {
    auto& c = r.rig("EQ_1_9_u" + tag(u), "Hasse series for the digamma function");
    c.params = {{"u", str(u)}};
    c.tolerance = 1e-6;
    c.lhs = [u](EvalContext& ctx) {
      StieltjesValue s = digamma_hasse(num(ctx, u), ctx.pool.hasse_config());
      return Estimate{s.value, s.error_estimate, s.terms_used};
    };
    c.rhs = [u](EvalContext& ctx) { return closed(digamma(num(ctx, u))); };
    c.lhs_deps = {M::Hasse};
    c.rhs_deps = {M::ZetaGamma};
  }
}

void polylog_and_moment_cases(Registry& r) {
  for (long n = 1; n <= 20; ++n) {
    auto& c = r.rig("EQ_B_2_n" + str(n), "harmonic-number moment of Omega");
    c.params = {{"n", str(n)}};
    c.lhs = [n](EvalContext& ctx) {
      return unit(ctx, [=](const XReal& y, const XReal& yc) {
        return pow(y, n) * omega_kernel(y, yc);
      });
    };
    c.rhs = [n](EvalContext& ctx) {
      return closed(ctx.pool.euler_gamma() - XReal(harmonic(n), ctx.prec) + log(num(ctx, n + 1)));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::Constants, M::Hasse};
  }

  for (long n : {1L, 2L, 5L, 10L}) {
    auto& c = r.rig("EQ_B_4_n" + str(n), "harmonic-number Laplace integral");
    c.params = {{"n", str(n)}};
    c.lhs = [n](EvalContext& ctx) {
      return closed(XReal(harmonic(n), ctx.prec) - log(num(ctx, n)) - ctx.pool.euler_gamma());
    };
    c.rhs = [n](EvalContext& ctx) {
      return half(ctx, [=](const XReal& x) { return -exp(-x * n) * bose_kernel(x); });
    };
    c.lhs_deps = {M::Constants, M::Hasse};
    c.rhs_deps = {M::Quadrature};
  }

  auto euler_sum = [](EvalContext& ctx) {
    XReal g = ctx.pool.euler_gamma(), z2 = ctx.pool.zeta(2);
    return closed(ctx.pool.zeta(3) * 2 + ctx.pool.zeta_prime_2() - g * z2);
  };
  {
    auto& c = r.rig("EQ_B_5", "Euler sum as a half-line dilogarithm integral");
    c.tolerance = 1e-8;
    c.lhs = euler_sum;
    c.rhs = [](EvalContext& ctx) {
      return half(ctx, [](const XReal& x) {
        return -dilog(exp(-x), -expm1(-x)) * bose_kernel(x);
      });
    };
    c.lhs_deps = {M::Constants, M::ZetaGamma};
    c.rhs_deps = {M::Quadrature, M::Polylog};
  }
  {
    auto& c = r.rig("EQ_B_6", "Euler sum as a unit-interval dilogarithm integral");
    c.tolerance = 1e-8;
    c.lhs = euler_sum;
    c.rhs = [](EvalContext& ctx) {
      return unit(ctx, [](const XReal& t, const XReal& tc) {
        // 1/(t-1) - 1/(t log t) = -Omega(t) + (1-t)/(t (-log t))
        XReal l = neg_log(t, tc);
        return dilog(t, tc) * (tc / (t * l) - omega_kernel(t, tc));
      });
    };
    c.lhs_deps = {M::Constants, M::ZetaGamma};
    c.rhs_deps = {M::Quadrature, M::Polylog};
  }
  {
    auto& c = r.rig("EQ_B_8", "zeta'(2) as a dilogarithm integral");
    c.tolerance = 1e-8;
    c.params = {{"s", "2"}};
    c.lhs = [](EvalContext& ctx) { return closed(ctx.pool.zeta_prime_2()); };
    c.rhs = [](EvalContext& ctx) {
      XReal z2 = ctx.pool.zeta(2);
      return unit(ctx, [=](const XReal& t, const XReal& tc) {
        XReal l = neg_log(t, tc);
        XReal numer(t.precision());
        if (tc < XReal(mpq_class(1, 2), t.precision()))
          // zeta(2) t - Li2(t) via the reflection Li2(t) = zeta(2) - log t log(1-t) - Li2(1-t)
          numer = dilog(tc, t) - l * log(tc) - z2 * tc;
        else
          numer = z2 * t - dilog(t, tc);
        return -numer / (t * l);
      });
    };
    c.lhs_deps = {M::ZetaGamma};
    c.rhs_deps = {M::Quadrature, M::Polylog, M::Constants};
  }
  {
    auto& c = r.rig("EQ_B_10", "2 zeta(3) - gamma zeta(2) as a dilogarithm integral");
    c.tolerance = 1e-6;
    c.lhs = [](EvalContext& ctx) {
      return closed(ctx.pool.zeta(3) * 2 - ctx.pool.euler_gamma() * ctx.pool.zeta(2));
    };
    c.rhs = [](EvalContext& ctx) {
      XReal z2 = ctx.pool.zeta(2);
      return unit(ctx, [=](const XReal& t, const XReal& tc) {
        XReal l = neg_log(t, tc);
        if (tc < XReal(mpq_class(1, 2), t.precision())) {
          XReal li_minus_z2 = l * log(tc) - dilog(tc, t);
          return -li_minus_z2 / tc - z2 * omega_kernel(t, tc);
        }
        return -dilog(t, tc) / tc + z2 / l;
      });
    };
    c.lhs_deps = {M::Constants};
    c.rhs_deps = {M::Quadrature, M::Polylog};
  }
  {
    auto& c = r.rig("EQ_B_11", "sum of log(1+1/n)/n^2 as a dilogarithm integral");
    c.tolerance = 1e-6;
    c.lhs = [](EvalContext& ctx) {
      SeriesOptions o;
      o.first = 1;
      SeriesResult s = sum_series(
          [&](long n) {
            XReal x = num(ctx, n);
            return log1p(1 / x) / (x * x);
          },
          XReal(1e-8, ctx.prec), Acceleration::richardson(), o);
      return Estimate{s.value, s.error_estimate, s.terms_used};
    };
    c.rhs = [](EvalContext& ctx) {
      return unit(ctx, [](const XReal& t, const XReal& tc) {
        return tc * dilog(t, tc) / (t * neg_log(t, tc));
      });
    };
    c.lhs_deps = {M::PrecisionCore};
    c.rhs_deps = {M::Quadrature, M::Polylog};
  }
  {
    auto& c = r.rig("EQ_B_15_x1o2", "integral of log log(1/t) through the logarithmic integral");
    c.params = {{"x", "1/2"}};
    c.lhs = [](EvalContext& ctx) {
      XReal x = num(ctx, mpq_class(1, 2));
      XReal lx = -log(x);
      Estimate e = unit(ctx, [=](const XReal& s, const XReal& sc) {
        return log(lx + neg_log(s, sc));
      });
      return scaled(e, x);
    };
    c.rhs = [](EvalContext& ctx) {
      XReal x = num(ctx, mpq_class(1, 2));
      return closed(x * log(-log(x)) - li_nielsen(x));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::Polylog};
  }

  for (long n = 0; n <= 2; ++n) {
    auto& c = r.rig("EQ_B_21_n" + str(n), "Stieltjes constant through a Coppo polynomial");
    c.params = {{"n", str(n)}};
    c.tolerance = 1e-6;
    c.lhs = [n](EvalContext& ctx) { return ctx.pool.stieltjes(n, 1); };
    c.rhs = [n](EvalContext& ctx) { return from_quad(stieltjes_via_coppo(n, ctx.prec)); };
    c.lhs_deps = {M::Hasse};
    c.rhs_deps = {M::Coppo};
  }

  for (long s : {2L, 3L})
    for (long x : {1L, 2L}) {
      auto& c = r.rig("EQ_B_25_s" + str(s) + "_x" + str(x),
                      "Hurwitz zeta minus its pole part as a Laplace integral");
      c.params = {{"s", str(s)}, {"x", str(x)}};
      c.lhs = [=](EvalContext& ctx) {
        XReal xx = num(ctx, x);
        XReal v = hurwitz_zeta(s, xx) - pow(xx, 1 - s) / (s - 1);
        return closed(v * XReal(factorial_exact(s - 1), ctx.prec));
      };
      c.rhs = [=](EvalContext& ctx) {
        return half(ctx, [=](const XReal& t) {
          return exp(-t * x) * (bose_kernel(t) + 1) * pow(t, s - 1);
        });
      };
      c.lhs_deps = {M::ZetaGamma};
      c.rhs_deps = {M::Quadrature};
    }

  struct CoppoForm { const char* id; long x; bool half_line; };
  for (const CoppoForm& f : {CoppoForm{"EQ_B_26", 2, true}, CoppoForm{"EQ_B_27", 1, true},
                             CoppoForm{"EQ_B_28", 2, false}, CoppoForm{"EQ_B_29", 1, false}})
    for (long n = 0; n <= 3; ++n) {
      auto& c = r.rig(std::string(f.id) + "_n" + str(n),
                      f.half_line ? "associated Stieltjes combination as a Laplace integral"
                                  : "associated Stieltjes combination as an Omega integral");
      c.params = {{"n", str(n)}, {"x", str(f.x)}};
      c.tolerance = 1e-6;
      long x = f.x;
      c.lhs = [=](EvalContext& ctx) { return coppo_combination(ctx, n, x); };
      if (f.half_line) {
        c.rhs = [=](EvalContext& ctx) {
          return half(ctx, [=](const XReal& t) {
            XReal v = exp(-t * x) * (bose_kernel(t) + 1);
            return n == 0 ? v : v * pow(log(t), n);
          });
        };
      } else {
        c.rhs = [=](EvalContext& ctx) { return omega_moment(ctx, x, static_cast<int>(n)); };
      }
      c.lhs_deps = {M::Hasse, M::ZetaGamma, M::Bell};
      c.rhs_deps = {M::Quadrature};
    }

  {
    auto& c = r.rig("EQ_B_30", "gamma_1 from the Omega-weighted log log integral");
    c.tolerance = 1e-6;
    c.lhs = [](EvalContext& ctx) { return ctx.pool.stieltjes(1, 1); };
    c.rhs = [](EvalContext& ctx) {
      XReal g = ctx.pool.euler_gamma();
      Estimate d = ctx.pool.dn(1);
      // int Omega log|log u| du = -d_1
      d.value = d.value - g * g;
      return d;
    };
    c.lhs_deps = {M::Hasse};
    c.rhs_deps = {M::Quadrature, M::Constants};
  }
  {
    auto& c = r.rig("EQ_C_1", "integral of log log(1/t) over the unit interval");
    c.lhs = [](EvalContext& ctx) {
      return unit(ctx, [](const XReal& t, const XReal& tc) { return log(neg_log(t, tc)); });
    };
    c.rhs = [](EvalContext& ctx) { return closed(-ctx.pool.euler_gamma()); };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::Constants};
  }
  {
    auto& c = r.rig("EQ_LOG2_ZETA3", "2 zeta(3) as the integral of log^2 y/(1-y)");
    c.lhs = [](EvalContext& ctx) { return closed(ctx.pool.zeta(3) * 2); };
    c.rhs = [](EvalContext& ctx) {
      return unit(ctx, [](const XReal& y, const XReal& yc) {
        XReal l = neg_log(y, yc);
        return l * l / yc;
      });
    };
    c.lhs_deps = {M::Constants};
    c.rhs_deps = {M::Quadrature};
  }

  struct AP { long a, p; };
  for (const AP& ap : {AP{1, 2}, AP{2, 3}}) {
    auto& c = r.rig("EQ_3_CORR_a" + str(ap.a) + "_p" + str(ap.p),
                    "Laplace integral of x^p/(1-e^-x) as Gamma times Hurwitz zeta");
    c.params = {{"a", str(ap.a)}, {"p", str(ap.p)}};
    c.lhs = [ap](EvalContext& ctx) {
      return half(ctx, [=](const XReal& x) {
        return exp(-x * ap.a) * pow(x, ap.p) / -expm1(-x);
      });
    };
    c.rhs = [ap](EvalContext& ctx) {
      return closed(XReal(factorial_exact(ap.p), ctx.prec) * hurwitz_zeta(ap.p + 1, num(ctx, ap.a)));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma};
  }
}

void continuation_audit_cases(Registry& r) {
  for (long u : {1L, 2L}) {
    auto& c = r.audit("EQ_2_4_u" + str(u), "continued-parameter log log moment of Omega");
    c.params = {{"u", str(u)}};
    c.lhs = [u](EvalContext& ctx) { return omega_moment(ctx, u, 1); };
    c.rhs = [u](EvalContext& ctx) {
      XReal g = ctx.pool.euler_gamma(), lu = log(num(ctx, u));
      Estimate g0 = ctx.pool.stieltjes(0, u), g1 = ctx.pool.stieltjes(1, u);
      Estimate s = plus(scaled(g1, num(ctx, -2)), scaled(g0, -g));
      s.value -= lu * lu + g * lu;
      return s;
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::Hasse, M::Constants};
  }
  {
    auto& c = r.audit("EQ_2_5", "continued-parameter value of the log log moment of Omega");
    c.lhs = [](EvalContext& ctx) { return omega_moment(ctx, 1, 1); };
    c.rhs = [](EvalContext& ctx) {
      XReal g = ctx.pool.euler_gamma();
      Estimate s = scaled(ctx.pool.stieltjes(1, 1), num(ctx, -2));
      s.value -= g * g;
      return s;
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::Hasse, M::Constants};
  }

  // 3 g2(u) + log^3 u + 2 g [2 g1(u) + log^2 u] - [zeta(2) - g^2][g0(u) + log u]
  auto second_moment_rhs = [](EvalContext& ctx, long u) {
    XReal g = ctx.pool.euler_gamma(), z2 = ctx.pool.zeta(2), lu = log(num(ctx, u));
    Estimate s = scaled(ctx.pool.stieltjes(2, u), num(ctx, 3));
    s = plus(s, scaled(ctx.pool.stieltjes(1, u), g * 4));
    s = plus(s, scaled(ctx.pool.stieltjes(0, u), g * g - z2));
    s.value += lu * lu * lu + g * 2 * lu * lu - (z2 - g * g) * lu;
    return s;
  };
  {
    auto& c = r.audit("EQ_2_9_u2", "continued-parameter log^2 log moment of Omega");
    c.params = {{"u", "2"}};
    c.lhs = [](EvalContext& ctx) { return omega_moment(ctx, 2, 2); };
    c.rhs = [=](EvalContext& ctx) { return second_moment_rhs(ctx, 2); };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::Hasse, M::Constants};
  }
  {
    auto& c = r.audit("EQ_2_10", "continued-parameter value of the log^2 log moment of Omega");
    c.lhs = [](EvalContext& ctx) { return omega_moment(ctx, 1, 2); };
    c.rhs = [=](EvalContext& ctx) { return second_moment_rhs(ctx, 1); };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::Hasse, M::Constants};
  }
  {
    auto& c = r.audit("EQ_2_11", "claimed positivity of 3 g2 + 4 g g1 - (zeta(2) - g^2) g");
    c.relation = Relation::Positive;
    c.lhs = [=](EvalContext& ctx) { return second_moment_rhs(ctx, 1); };
    c.rhs = [](EvalContext& ctx) { return closed(XReal(ctx.prec)); };
    c.lhs_deps = {M::Hasse, M::Constants};
  }
  {
    auto& c = r.audit("EQ_2_11_SIGN_I2", "positivity of the log^2 log moment of Omega");
    c.relation = Relation::Positive;
    c.lhs = [](EvalContext& ctx) { return omega_moment(ctx, 1, 2); };
    c.rhs = [](EvalContext& ctx) { return closed(XReal(ctx.prec)); };
    c.lhs_deps = {M::Quadrature};
  }
  for (long n = 0; n <= 4; ++n) {
    auto& c = r.audit("EQ_2_6_n" + str(n), "positivity of d_n");
    c.params = {{"n", str(n)}};
    c.relation = Relation::Positive;
    c.lhs = [n](EvalContext& ctx) { return ctx.pool.dn(n); };
    c.rhs = [](EvalContext& ctx) { return closed(XReal(ctx.prec)); };
    c.lhs_deps = {M::Quadrature};
  }

  const std::string inferred =
      "variant with a single gamma_1'(1) term; inferred, not printed";
  struct Form { const char* id; bool with_omega; bool derived; };
  for (const Form& f : {Form{"EQ_2_14", true, false}, Form{"EQ_2_14_DERIVED", true, true},
                        Form{"EQ_2_15", false, false}, Form{"EQ_2_15_DERIVED", false, true}}) {
    auto& c = r.audit(f.id, f.with_omega ? "Omega-weighted log y log|log y| integral"
                                         : "log y log|log y|/(1-y) integral");
    if (f.derived) c.note = inferred;
    bool with_omega = f.with_omega, derived = f.derived;
    c.lhs = [=](EvalContext& ctx) {
      return unit(ctx, [=](const XReal& y, const XReal& yc) {
        XReal l = neg_log(y, yc);
        XReal v = l * log(l);
        return with_omega ? v * omega_kernel(y, yc) : v / yc;
      });
    };
    c.rhs = [=](EvalContext& ctx) {
      XReal g = ctx.pool.euler_gamma(), z2 = ctx.pool.zeta(2), p = ctx.pool.pi();
      XReal l2p = ctx.pool.log_two_pi(), zm1 = ctx.pool.zeta_prime_minus_one();
      XReal v = derived ? p * p * 2 * zm1 + z2 * l2p : p * p * 4 * zm1 + z2 * (g + l2p * 2);
      if (with_omega) v += g;
      return closed(v);
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma, M::Constants};
  }

  for (long m = 0; m <= 3; ++m) {
    auto& c = r.audit("EQ_3_12_m" + str(m), "Stieltjes constant from Gamma derivatives and log log moments");
    c.params = {{"m", str(m)}};
    c.lhs = [m](EvalContext& ctx) { return scaled(ctx.pool.stieltjes(m, 1), num(ctx, m + 1)); };
    c.rhs = [m](EvalContext& ctx) {
      Estimate s = closed(XReal(ctx.prec));
      for (long k = 0; k <= m; ++k) {
        XReal w = XReal(binomial_exact(m, k), ctx.prec) * ctx.pool.gamma_derivative_at_1(k);
        if ((m - k) % 2 != 0) w = -w;
        s = plus(s, scaled(omega_moment(ctx, 1, static_cast<int>(m - k)), w));
      }
      return s;
    };
    c.lhs_deps = {M::Hasse};
    c.rhs_deps = {M::Quadrature, M::ZetaGamma, M::Bell};
  }
  for (long m = 0; m <= 3; ++m) {
    auto& c = r.audit("EQ_3_15_m" + str(m), "Stieltjes constant as a c_k d_k convolution");
    c.params = {{"m", str(m)}};
    c.lhs = [m](EvalContext& ctx) { return scaled(ctx.pool.stieltjes(m, 1), num(ctx, m + 1)); };
    c.rhs = [m](EvalContext& ctx) {
      Estimate s = closed(XReal(ctx.prec));
      for (long k = 0; k <= m; ++k) {
        // c_k = (-1)^k Gamma^(k)(1)
        XReal ck = ctx.pool.gamma_derivative_at_1(k);
        if (k % 2 != 0) ck = -ck;
        XReal w = XReal(binomial_exact(m, k), ctx.prec) * ck;
        if (k % 2 != 0) w = -w;
        s = plus(s, scaled(ctx.pool.dn(m - k), w));
      }
      return s;
    };
    c.lhs_deps = {M::Hasse};
    c.rhs_deps = {M::Quadrature, M::ZetaGamma, M::Bell};
  }

  struct AP { long a, p; };
  for (const AP& ap : {AP{1, 2}, AP{2, 3}}) {
    auto& c = r.audit("EQ_3_PRINTED_a" + str(ap.a) + "_p" + str(ap.p),
                      "Laplace integral with the log(1-e^-x) kernel");
    c.params = {{"a", str(ap.a)}, {"p", str(ap.p)}};
    c.tolerance = 1e-10;
    c.lhs = [ap](EvalContext& ctx) {
      return half(ctx, [=](const XReal& x) {
        XReal one_minus = -expm1(-x);
        return exp(-x * ap.a) * pow(x, ap.p - 1) * log(one_minus) / one_minus;
      });
    };
    c.rhs = [ap](EvalContext& ctx) {
      return closed(XReal(factorial_exact(ap.p), ctx.prec) * hurwitz_zeta(ap.p + 1, num(ctx, ap.a)));
    };
    c.lhs_deps = {M::Quadrature};
    c.rhs_deps = {M::ZetaGamma};
  }
}

std::vector<IdentityCase> build() {
  Registry r;
  binomial_cases(r);
  digamma_cases(r);
  polylog_and_moment_cases(r);
  continuation_audit_cases(r);
  return std::move(r.cases);
}

}  // namespace

IdentityCase binomial_log_power_case(long r, const mpq_class& u, long n) {
  if (r < 1 || n < 0) throw DomainError("binomial_log_power_case: need r >= 1, n >= 0");
  IdentityCase c;
  c.id = "EQ_1_5_r" + str(r) + "_u" + tag(u) + "_n" + str(n);
  c.params = {{"r", str(r)}, {"u", str(u)}, {"n", str(n)}};
  c.family = Family::Rigorous;
  c.tolerance = 1e-10;
  c.anchor = "unit-interval binomial integral against log^r y";
  c.lhs = [=](EvalContext& ctx) {
    XReal um1 = num(ctx, u - 1);
    return unit(ctx, [=](const XReal& y, const XReal& yc) {
      XReal l = neg_log(y, yc);
      XReal v = exp(-um1 * l) * pow(yc, n) / pow(l, r);
      return r % 2 == 0 ? v : -v;
    });
  };
  c.rhs = [=](EvalContext& ctx) {
    XReal s = alt_binomial(ctx, n, [&](long j) {
      XReal a = num(ctx, u + j);
      return pow(a, r - 1) * log(a);
    });
    return closed(s / XReal(factorial_exact(r - 1), ctx.prec));
  };
  c.lhs_deps = {M::Quadrature};
  c.rhs_deps = {M::PrecisionCore};
  return c;
}

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> cases = build();
  return cases;
}

ModuleSet module_closure(ModuleSet direct) {
  ModuleSet out = direct | ModuleSet{M::PrecisionCore};
  if (out.contains(M::Coppo)) out = out | ModuleSet{M::Quadrature, M::ZetaGamma};
  if (out.contains(M::Polylog)) out = out | ModuleSet{M::Constants};
  if (out.contains(M::ZetaGamma)) out = out | ModuleSet{M::Bell};
  return out;
}

std::string module_names(ModuleSet s) {
  static const std::pair<Module, const char*> names[] = {
      {M::PrecisionCore, "precision-core"}, {M::Constants, "constants"},
      {M::Bell, "bell"},                    {M::ZetaGamma, "zeta-gamma"},
      {M::Hasse, "hasse"},                  {M::Quadrature, "quadrature"},
      {M::Polylog, "polylog"},              {M::Coppo, "coppo"}};
  std::string out;
  for (const auto& [m, name] : names)
    if (s.contains(m)) {
      if (!out.empty()) out += ",";
      out += name;
    }
  return out;
}

std::vector<std::string> validate_registry(const std::vector<IdentityCase>& cases) {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  const ModuleSet shared_ok{M::PrecisionCore, M::Constants};
  for (const IdentityCase& c : cases) {
    if (c.id.empty()) problems.push_back("case with empty id");
    if (!seen.insert(c.id).second) problems.push_back(c.id + ": duplicate id");
    if (c.anchor.empty()) problems.push_back(c.id + ": missing anchor");
    if (!c.lhs || !c.rhs) problems.push_back(c.id + ": missing evaluator");
    ModuleSet overlap = module_closure(c.lhs_deps) & module_closure(c.rhs_deps);
    overlap.bits &= ~shared_ok.bits;
    if (overlap.bits != 0)
      problems.push_back(c.id + ": sides share " + module_names(overlap));
  }
  return problems;
}

std::vector<IdentityCase> select_cases(const std::vector<IdentityCase>& cases,
                                       const std::optional<std::string>& id,
                                       const std::optional<Family>& family) {
  std::vector<IdentityCase> out;
  for (const IdentityCase& c : cases) {
    if (family && c.family != *family) continue;
    if (id && c.id != *id && c.id.rfind(*id + "_", 0) != 0) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace stieltjes
