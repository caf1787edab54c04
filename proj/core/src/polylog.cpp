#include "stieltjes/polylog.hpp"

#include "stieltjes/gamma.hpp"
#include "stieltjes/kernels.hpp"

namespace stieltjes {

namespace {

// sum x^k / k^2 for 0 <= x <= 1/2
XReal dilog_series(const XReal& x, Bits p) {
  XReal s(p), xk = x.rounded(p);
  XReal cut = ldexp(XReal(1L, p), -p.value - 8);
  for (long k = 1; !xk.is_zero(); ++k) {
    XReal t = xk / (k * k);
    s += t;
    if (t < cut) break;
    xk *= x;
  }
  return s;
}

}  // namespace

XReal dilog(const XReal& x) {
  if (x < 0 || x > 1 || x.is_nan()) throw DomainError("dilog: argument outside [0, 1]");
  return dilog(x, 1 - x.rounded(x.precision() + 64));
}

XReal dilog(const XReal& x, const XReal& xc) {
  if (x < 0 || xc < 0 || x.is_nan() || xc.is_nan()) {
    throw DomainError("dilog: argument outside [0, 1]");
  }
  const Bits p = max(x.precision(), xc.precision());
  const Bits g = p + 32;
  if (x.is_zero()) return XReal(p);
  XReal pg = pi(g);
  XReal z2 = pg * pg / 6;
  if (xc.is_zero()) return z2.rounded(p);
  if (x.exponent() < 0 || x == XReal::parse("0.5", g)) return dilog_series(x, g).rounded(p);
  // Li2(x) = zeta(2) - log x log(1-x) - Li2(1-x)
  XReal lx = -neg_log(x.rounded(g), xc.rounded(g));
  XReal r = z2 - lx * log(xc.rounded(g)) - dilog_series(xc, g);
  return r.rounded(p);
}

XReal li_nielsen(const XReal& x) {
  if (!(x > 0) || !(x < 1)) throw DomainError("li_nielsen: argument outside (0, 1)");
  return li_nielsen(x, 1 - x.rounded(x.precision() + 64));
}

XReal li_nielsen(const XReal& x, const XReal& xc) {
  if (!(x > 0) || !(xc > 0)) throw DomainError("li_nielsen: argument outside (0, 1)");
  const Bits p = max(x.precision(), xc.precision());
  const Bits g = p + 32;
  XReal l = -neg_log(x.rounded(g), xc.rounded(g));  // log x < 0
  XReal s = euler_gamma(g) + log(-l);
  XReal term(1L, g);  // log^n x / n!
  XReal cut = ldexp(XReal(1L, g), -p.value - 8);
  for (long n = 1;; ++n) {
    term *= l;
    term /= n;
    XReal t = term / n;
    s += t;
    if (abs(t) < cut && abs(term) < 1) break;
  }
  return s.rounded(p);
}

}  // namespace stieltjes
