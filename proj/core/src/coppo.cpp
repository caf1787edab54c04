#include "stieltjes/coppo.hpp"

#include "stieltjes/gamma.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/series.hpp"

namespace stieltjes {

XReal CoppoPoly::operator()(const XReal& z) const {
  XReal r(max(z.precision(), a.back().precision()));
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * z + *it;
  return r;
}

CoppoPoly coppo_polynomial(long n, Bits prec) {
  if (n < 0) throw DomainError("coppo_polynomial: negative degree");
  const Bits g = prec + 32;
  std::vector<XReal> gd;
  for (long l = 0; l <= n; ++l) gd.push_back(gamma_derivative(l, XReal(1L, g)));
  std::vector<XReal> a(static_cast<std::size_t>(n + 1), XReal(g));
  a[static_cast<std::size_t>(n)] = XReal(1L, g);
  for (long k = n - 1; k >= 0; --k) {
    XReal s(g);
    for (long l = 1; k + l <= n; ++l) {
      XReal t = XReal(binomial_exact(k + l, l), g) * gd[static_cast<std::size_t>(l)] *
                a[static_cast<std::size_t>(k + l)];
      if (l % 2 == 0) s += t; else s -= t;
    }
    a[static_cast<std::size_t>(k)] = -s;
  }
  CoppoPoly out{n, {}};
  for (const XReal& c : a) out.a.push_back(c.rounded(prec));
  return out;
}

QuadResult coppo_moment_check(long n, const XReal& x) {
  if (n < 0 || n > 6) throw DomainError("coppo_moment_check: need 0 <= n <= 6");
  const Bits p = x.precision();
  CoppoPoly poly = coppo_polynomial(n, p);
  return integrate_halfline([&](const XReal& z) { return poly(x - log(z)) * exp(-z); },
                            ldexp(XReal(1L, p), -p.value / 2));
}

QuadResult stieltjes_via_coppo(long n, Bits prec) {
  if (n < 0 || n > 4) throw DomainError("stieltjes_via_coppo: need 0 <= n <= 4");
  CoppoPoly poly = coppo_polynomial(n, prec);
  return integrate_unit(
      [&](const XReal& t, const XReal& tc) {
        XReal z = -log(neg_log(t, tc));
        // 1/log t - 1/(t-1) is Omega(t)
        return poly(z) * omega_kernel(t, tc);
      },
      ldexp(XReal(1L, prec), -prec.value / 2));
}

}  // namespace stieltjes
