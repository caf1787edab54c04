#include "stieltjes/gamma.hpp"

#include <algorithm>

#include "stieltjes/bell.hpp"
#include "stieltjes/series.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {

namespace {

void require_positive(const XReal& x, const char* who) {
  if (!(x > 0) || !x.is_finite()) throw DomainError(std::string(who) + ": argument must be positive");
}

// Shift point for the asymptotic expansions: the smallest term of the
// Stirling-type series is about exp(-2 pi x).
long shift_target(Bits p) { return std::max<long>(10, p.value * 3 / 20 + 10); }

}  // namespace

XReal digamma(const XReal& x) {
  require_positive(x, "digamma");
  const Bits p = x.precision();
  const Bits g = p + 32;
  XReal z = x.rounded(g);
  XReal acc(g);
  const long target = shift_target(p);
  while (z < target) {
    acc -= 1 / z;
    z += 1;
  }
  // psi(z) ~ log z - 1/(2z) - sum B_2k / (2k z^2k)
  XReal r = log(z) - 1 / (2 * z);
  XReal z2inv = 1 / (z * z), zpow = z2inv;
  XReal cut = ldexp(XReal(1L, g), -p.value - 16);
  for (long k = 1;; ++k) {
    XReal t = XReal(mpq_class(bernoulli_number(2 * k) / (2 * k)), g) * zpow;
    r -= t;
    if (abs(t) < cut) break;
    zpow *= z2inv;
  }
  return (r + acc).rounded(p);
}

XReal polygamma(long order, const XReal& x) {
  if (order < 1) throw DomainError("polygamma: order must be at least 1");
  require_positive(x, "polygamma");
  XReal z = hurwitz_zeta(order + 1, x);
  z *= XReal(factorial_exact(order), x.precision());
  return order % 2 == 1 ? z : -z;
}

XReal euler_gamma(Bits prec) { return -digamma(XReal(1L, prec)); }

XReal log_gamma(const XReal& x) {
  require_positive(x, "log_gamma");
  const Bits p = x.precision();
  const Bits g = p + 32;
  XReal z = x.rounded(g);
  XReal prod(1L, g);
  const long target = shift_target(p);
  while (z < target) {
    prod *= z;
    z += 1;
  }
  // log Gamma(z) ~ (z - 1/2) log z - z + log(2 pi)/2 + sum B_2k / (2k(2k-1) z^(2k-1))
  XReal r = (z - XReal::parse("0.5", g)) * log(z) - z + log(2 * pi(g)) / 2;
  XReal zinv = 1 / z, z2inv = zinv * zinv, zpow = zinv;
  XReal cut = ldexp(XReal(1L, g), -p.value - 16);
  for (long k = 1;; ++k) {
    XReal t = XReal(mpq_class(bernoulli_number(2 * k) / ((2 * k) * (2 * k - 1))), g) * zpow;
    r += t;
    if (abs(t) < cut) break;
    zpow *= z2inv;
  }
  return (r - log(prod)).rounded(p);
}

XReal gamma(const XReal& x) {
  const Bits p = x.precision();
  return exp(log_gamma(x.rounded(p + 32))).rounded(p);
}

XReal gamma_derivative(long m, const XReal& x) {
  if (m < 0) throw DomainError("gamma_derivative: negative order");
  require_positive(x, "gamma_derivative");
  const Bits p = x.precision();
  const Bits g = p + 32 + 4 * m;
  XReal xg = x.rounded(g);
  XReal gx = gamma(xg);
  if (m == 0) return gx.rounded(p);
  std::vector<XReal> args;
  args.push_back(digamma(xg));
  for (long k = 1; k < m; ++k) args.push_back(polygamma(k, xg));
  return (gx * bell_eval(bell_complete(static_cast<int>(m)), args)).rounded(p);
}

XReal log_gamma_integer(long t, Bits prec) {
  if (t < 1) throw DomainError("log_gamma_integer: need t >= 1");
  return log(XReal(factorial_exact(t), prec + 16)).rounded(prec);
}

}  // namespace stieltjes
