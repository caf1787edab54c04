#pragma once

// Reference values computed straight from MPFR or by exact arithmetic,
// never through the library's own algorithms.

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "stieltjes/xreal.hpp"

namespace oracle {

using stieltjes::Bits;
using stieltjes::XReal;

inline XReal wrap(const std::function<void(mpfr_ptr)>& fill, Bits prec) {
  XReal r(0L, prec);
  fill(r.raw());
  return r;
}

inline XReal euler(Bits p) { return wrap([](mpfr_ptr r) { mpfr_const_euler(r, MPFR_RNDN); }, p); }
inline XReal pi(Bits p) { return wrap([](mpfr_ptr r) { mpfr_const_pi(r, MPFR_RNDN); }, p); }
inline XReal log2(Bits p) { return wrap([](mpfr_ptr r) { mpfr_const_log2(r, MPFR_RNDN); }, p); }

inline XReal zeta(long s, Bits p) {
  return wrap([s](mpfr_ptr r) { mpfr_zeta_ui(r, static_cast<unsigned long>(s), MPFR_RNDN); }, p);
}
inline XReal zeta(const XReal& s) {
  return wrap([&](mpfr_ptr r) { mpfr_zeta(r, s.get(), MPFR_RNDN); }, s.precision());
}
inline XReal digamma(const XReal& x) {
  return wrap([&](mpfr_ptr r) { mpfr_digamma(r, x.get(), MPFR_RNDN); }, x.precision());
}
inline XReal gamma(const XReal& x) {
  return wrap([&](mpfr_ptr r) { mpfr_gamma(r, x.get(), MPFR_RNDN); }, x.precision());
}
inline XReal lngamma(const XReal& x) {
  return wrap([&](mpfr_ptr r) { mpfr_lngamma(r, x.get(), MPFR_RNDN); }, x.precision());
}
inline XReal li2(const XReal& x) {
  return wrap([&](mpfr_ptr r) { mpfr_li2(r, x.get(), MPFR_RNDN); }, x.precision());
}
// li(x) = Ei(log x) for 0 < x < 1
inline XReal li(const XReal& x) {
  XReal l = stieltjes::log(x);
  return wrap([&](mpfr_ptr r) { mpfr_eint(r, l.get(), MPFR_RNDN); }, x.precision());
}

inline std::vector<XReal> gauss_solve(std::vector<std::vector<XReal>> a, std::vector<XReal> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (stieltjes::abs(a[r][c]) > stieltjes::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      XReal f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<XReal> x(n, XReal(0L, b[0].precision()));
  for (std::size_t i = n; i-- > 0;) {
    XReal s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

// Taylor coefficients c_0..c_{2K-1} of f at t = 0 by interpolating at
// t = +-h, +-2h, ..., +-Kh (t = 0 itself is never sampled).
inline std::vector<XReal> taylor_fit(const std::function<XReal(const XReal&)>& f, const XReal& h,
                                     int K) {
  const Bits p = h.precision();
  std::vector<std::vector<XReal>> a;
  std::vector<XReal> b;
  for (int k = -K; k <= K; ++k) {
    if (k == 0) continue;
    XReal t = h * k;
    std::vector<XReal> row;
    XReal pw(1L, p);
    for (int j = 0; j < 2 * K; ++j) {
      row.push_back(pw);
      pw *= t;
    }
    a.push_back(std::move(row));
    b.push_back(f(t));
  }
  return gauss_solve(std::move(a), std::move(b));
}

inline XReal factorial(long n, Bits p) {
  mpz_class f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return XReal(f, p);
}

// gamma_n from the regular part zeta(1+t) - 1/t = sum (-1)^n gamma_n t^n / n!
inline std::vector<XReal> stieltjes_constants(int n_max, Bits prec) {
  const Bits w{2 * prec.value + 64};
  auto f = [&](const XReal& t) { return zeta(t + 1) - 1 / t; };
  auto c = taylor_fit(f, XReal(mpq_class(1, 16), w), 12);
  std::vector<XReal> out;
  for (int n = 0; n <= n_max; ++n) {
    XReal g = c[static_cast<std::size_t>(n)] * factorial(n, w);
    if (n % 2) g = -g;
    out.push_back(g.rounded(prec));
  }
  return out;
}

// Gamma^(m)(x) from a Taylor fit of MPFR's gamma
inline XReal gamma_derivative(int m, const XReal& x) {
  const Bits w{2 * x.precision().value + 64};
  XReal xw = x.rounded(w);
  auto c = taylor_fit([&](const XReal& t) { return gamma(xw + t); }, XReal(mpq_class(1, 1024), w), 12);
  return (c[static_cast<std::size_t>(m)] * factorial(m, w)).rounded(x.precision());
}

inline XReal zeta_derivative(long s, Bits prec) {
  const Bits w{2 * prec.value + 64};
  XReal s0(s, w);
  auto c = taylor_fit([&](const XReal& t) { return zeta(s0 + t); }, XReal(mpq_class(1, 1024), w), 12);
  return c[1].rounded(prec);
}

// zeta(s, x) for positive integer x, or x = 1/2
inline XReal hurwitz(long s, const mpq_class& x, Bits prec) {
  XReal z = zeta(s, prec);
  if (x == mpq_class(1, 2)) return (stieltjes::pow(XReal(2L, prec), s) - 1) * z;
  if (x.get_den() != 1 || x < 1) throw std::invalid_argument("hurwitz oracle: unsupported x");
  for (long k = 1; k < x.get_num().get_si(); ++k) z -= stieltjes::pow(XReal(k, prec), -s);
  return z;
}

// Akiyama-Tanigawa, B_1 = +1/2 convention flipped to -1/2
inline mpq_class bernoulli(long n) {
  std::vector<mpq_class> a(static_cast<std::size_t>(n + 1));
  for (long m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (long j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
      a[static_cast<std::size_t>(j - 1)].canonicalize();
    }
  }
  return n == 1 ? mpq_class(-1, 2) : a[0];
}

inline std::vector<mpz_class> bell_numbers(int n_max) {
  std::vector<mpz_class> out{1};
  std::vector<mpz_class> row{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<mpz_class> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    out.push_back(next.front());
    row = std::move(next);
  }
  return out;
}

// Euler's pentagonal recurrence
inline std::vector<mpz_class> partition_counts(int n_max) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n_max + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      int sgn = k % 2 ? 1 : -1;
      p[static_cast<std::size_t>(n)] += sgn * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) p[static_cast<std::size_t>(n)] += sgn * p[static_cast<std::size_t>(n - g2)];
    }
  }
  return p;
}

// Taylor coefficients of exp(sum_{j>=1} x_j t^j / j!), exactly
inline std::vector<mpq_class> exp_series(const std::vector<mpq_class>& x, int n_max) {
  std::vector<mpq_class> a(static_cast<std::size_t>(n_max + 1), 0), b(a.size(), 0);
  mpz_class fact = 1;
  for (int j = 1; j <= n_max && j <= static_cast<int>(x.size()); ++j) {
    fact *= j;
    a[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j - 1)] / mpq_class(fact);
  }
  b[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    mpq_class s = 0;
    for (int k = 1; k <= n; ++k) s += k * a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    b[static_cast<std::size_t>(n)] = s / n;
    b[static_cast<std::size_t>(n)].canonicalize();
  }
  return b;
}

inline mpq_class random_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 9) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline XReal random_unit(std::mt19937_64& rng, Bits p, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return XReal(d(rng), p);
}

inline XReal tol(double v, Bits p) { return XReal(v, p); }

}  // namespace oracle
