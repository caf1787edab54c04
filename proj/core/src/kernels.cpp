#include "stieltjes/kernels.hpp"

#include "stieltjes/series.hpp"

namespace stieltjes {

namespace {

void require_unit(const XReal& y, const XReal& c, const char* who) {
  if (!(y > 0) || !(c > 0) || !y.is_finite() || !c.is_finite()) {
    throw DomainError(std::string(who) + ": argument outside (0, 1)");
  }
}

}  // namespace

XReal neg_log(const XReal& y, const XReal& c) {
  if (c.exponent() < 0) return -log1p(-c);  // c < 1/2
  return -log(y);
}

XReal omega_kernel(const XReal& y) {
  if (!(y > 0) || !(y < 1)) throw DomainError("omega_kernel: argument outside (0, 1)");
  Bits g = y.precision() + 64;
  return omega_kernel(y, 1 - y.rounded(g));
}

XReal omega_kernel(const XReal& y, const XReal& c) {
  require_unit(y, c, "omega_kernel");
  const Bits p = max(y.precision(), c.precision());
  if (c.exponent() <= -p.value / 3) {
    // Omega(1 - c) = sum_{n>=1} (-1)^(n+1) G_n c^(n-1)
    XReal cut = ldexp(XReal(1L, p), -p.value - 8);
    XReal sum(p), cpow(1L, p);
    for (long n = 1;; ++n) {
      XReal t = XReal(gregory_coefficient(n), p) * cpow;
      if (n % 2 == 0) t = -t;
      sum += t;
      if (abs(t) < cut) break;
      cpow *= c;
    }
    return sum;
  }
  const Bits g = p + (p.value / 3 + 32);
  XReal cg = c.rounded(g);
  XReal lg = neg_log(y.rounded(g), cg);
  return (1 / cg - 1 / lg).rounded(p);
}

XReal bose_kernel(const XReal& x) {
  if (!(x > 0) || x.is_nan()) throw DomainError("bose_kernel: argument must be positive");
  const Bits p = x.precision();
  if (x.is_finite() && x.exponent() <= -p.value / 4) {
    // sum_{n>=1} B_n x^(n-1) / n!
    XReal cut = ldexp(XReal(1L, p), -p.value - 8);
    XReal sum(-1L, p);
    sum /= 2;
    XReal x2 = x * x, xpow = x;
    for (long n = 2;; n += 2) {
      XReal t = XReal(mpq_class(bernoulli_number(n) / factorial_exact(n)), p) * xpow;
      sum += t;
      if (abs(t) < cut) break;
      xpow *= x2;
    }
    return sum;
  }
  if (!x.is_finite()) return XReal(p);
  const Bits g = p + (p.value / 4 + 32);
  XReal xg = x.rounded(g);
  return (1 / expm1(xg) - 1 / xg).rounded(p);
}

XReal loglog_power_kernel(const XReal& y, int n) {
  if (!(y > 0) || !(y < 1)) throw DomainError("loglog_power_kernel: argument outside (0, 1)");
  return loglog_power_kernel(y, 1 - y.rounded(y.precision() + 64), n);
}

XReal loglog_power_kernel(const XReal& y, const XReal& c, int n) {
  require_unit(y, c, "loglog_power_kernel");
  if (n < 0) throw DomainError("loglog_power_kernel: negative power");
  const Bits p = max(y.precision(), c.precision());
  if (n == 0) return XReal(1L, p);
  XReal l = log(neg_log(y, c));
  return n == 1 ? l.rounded(p) : pow(l, static_cast<long>(n)).rounded(p);
}

}  // namespace stieltjes
