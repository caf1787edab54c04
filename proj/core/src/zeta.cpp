#include "stieltjes/zeta.hpp"

#include <algorithm>
#include <limits>

#include "stieltjes/gamma.hpp"
#include "stieltjes/series.hpp"

namespace stieltjes {

namespace {

// Euler-Maclaurin for zeta(s, x) or its s-derivative. The first N terms are
// summed directly; N doubles if the Bernoulli corrections stop shrinking
// before they reach the target.
XReal euler_maclaurin(long s, const XReal& x, bool deriv) {
  if (s < 2) throw DomainError("zeta: need integer s >= 2, got " + std::to_string(s));
  if (!(x > 0) || !x.is_finite()) throw DomainError("zeta: Hurwitz parameter must be positive");
  const Bits p = x.precision();
  const Bits g = p + 32;
  const XReal xg = x.rounded(g);
  XReal cut = ldexp(XReal(1L, g), -p.value - 16);
  long n_direct = std::max<long>(64, p.value / 4);

  for (int attempt = 0; attempt < 12; ++attempt, n_direct *= 2) {
    XReal sum(g);
    for (long k = 0; k < n_direct; ++k) {
      XReal t = xg + k;
      XReal pw = pow(t, -s);
      if (deriv) sum -= log(t) * pw; else sum += pw;
    }
    const XReal a = xg + n_direct;
    const XReal la = log(a);
    const XReal a1s = pow(a, 1 - s);
    const XReal as = pow(a, -s);
    if (!deriv) {
      sum += a1s / (s - 1) + as / 2;
    } else {
      sum -= la * a1s / (s - 1) + a1s / ((s - 1) * (s - 1)) + la * as / 2;
    }

    XReal apow = pow(a, -s - 1);
    const XReal a2inv = 1 / (a * a);
    mpz_class poly = s;        // s (s+1) ... (s+2j-2)
    mpq_class recip = mpq_class(1, s);  // sum_{i=0}^{2j-2} 1/(s+i)
    XReal prev_abs(g);
    bool done = false;
    for (long j = 1; j < 4 * p.value; ++j) {
      if (j > 1) {
        poly *= (s + 2 * j - 3) * (s + 2 * j - 2);
        recip += mpq_class(1, s + 2 * j - 3) + mpq_class(1, s + 2 * j - 2);
      }
      mpq_class coef = bernoulli_number(2 * j) * mpq_class(poly) / mpq_class(factorial_exact(2 * j));
      XReal t = XReal(coef, g) * apow;
      if (deriv) t *= XReal(recip, g) - la;
      sum += t;
      XReal at = abs(t);
      if (at < cut && j >= 6) {
        done = true;
        break;
      }
      if (j > 1 && at > prev_abs) break;
      prev_abs = at;
      apow *= a2inv;
    }
    if (done) return sum.rounded(p);
  }
  throw NonConvergence("zeta: Euler-Maclaurin cutoff did not settle");
}

}  // namespace

XReal hurwitz_zeta(long s, const XReal& x) { return euler_maclaurin(s, x, false); }

XReal hurwitz_zeta_ds(long s, const XReal& x) { return euler_maclaurin(s, x, true); }

XReal riemann_zeta(long s, Bits prec) { return hurwitz_zeta(s, XReal(1L, prec)); }

XReal zeta_prime_2(Bits prec) { return hurwitz_zeta_ds(2, XReal(1L, prec)); }

XReal zeta_prime_minus_one(Bits prec) {
  // differentiate zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) at s = -1
  const Bits g = prec + 32;
  XReal p = pi(g);
  XReal two_pi = 2 * p;
  XReal r = zeta_prime_2(g) / (2 * p * p) + (1 - euler_gamma(g) - log(two_pi)) / 12;
  return r.rounded(prec);
}

}  // namespace stieltjes
