#include "stieltjes/series.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace stieltjes {

namespace {

SeriesResult sum_plain(const TermFn& term, const XReal& tol, const SeriesOptions& opts) {
  const Bits p = tol.precision();
  XReal sum(p);
  XReal small = tol / 16;
  XReal tail_max(p);
  int quiet = 0;
  for (long i = 0; i < opts.max_terms; ++i) {
    XReal t = term(opts.first + i);
    sum += t;
    XReal a = abs(t);
    if (a < small) {
      tail_max = max(tail_max, a);
      if (++quiet == 8) {
        return {sum, i + 1, tail_max * 8, true};
      }
    } else {
      quiet = 0;
      tail_max = XReal(p);
    }
  }
  throw NonConvergence("sum_series: term budget exhausted after " +
                       std::to_string(opts.max_terms) + " terms");
}

SeriesResult sum_richardson(const TermFn& term, const XReal& tol, const SeriesOptions& opts,
                            int depth) {
  const Bits p = tol.precision();
  std::vector<XReal> h, partial;
  XReal sum(p);
  long used = 0;
  long target = std::max<long>(opts.ladder_start, 1);
  XReal prev_est(p);
  bool have_prev = false;
  while (target <= opts.max_terms) {
    for (; used < target; ++used) sum += term(opts.first + used);
    h.push_back(1 / XReal(target, p));
    partial.push_back(sum);
    const std::size_t k = std::min<std::size_t>(h.size(), static_cast<std::size_t>(depth) + 1);
    std::vector<XReal> hs(h.end() - static_cast<long>(k), h.end());
    std::vector<XReal> ps(partial.end() - static_cast<long>(k), partial.end());
    XReal est = neville_at_zero(hs, ps);
    if (have_prev) {
      XReal diff = abs(est - prev_est);
      if (h.size() > static_cast<std::size_t>(depth) && diff < tol) {
        return {est, used, diff, true};
      }
    }
    prev_est = est;
    have_prev = true;
    target *= 2;
  }
  throw NonConvergence("sum_series: Richardson ladder exceeded " +
                       std::to_string(opts.max_terms) + " terms");
}

}  // namespace

SeriesResult sum_series(const TermFn& term, const XReal& tol, Acceleration acc,
                        SeriesOptions opts) {
  if (!(tol > 0)) throw DomainError("sum_series: tolerance must be positive");
  if (acc.kind == Acceleration::Kind::Richardson) {
    if (acc.depth < 1) throw DomainError("sum_series: Richardson depth must be at least 1");
    return sum_richardson(term, tol, opts, acc.depth);
  }
  return sum_plain(term, tol, opts);
}

XReal neville_at_zero(const std::vector<XReal>& h, const std::vector<XReal>& values) {
  if (h.empty() || h.size() != values.size()) {
    throw DomainError("neville_at_zero: mismatched or empty samples");
  }
  std::vector<XReal> t = values;
  const std::size_t n = t.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      // extrapolate the pair (i, i+m) to zero
      t[i] = (h[i] * t[i + 1] - h[i + m] * t[i]) / (h[i] - h[i + m]);
    }
  }
  return t[0];
}

std::vector<XReal> solve_linear(std::vector<std::vector<XReal>> a, std::vector<XReal> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    }
    if (a[piv][col].is_zero()) throw DomainError("solve_linear: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      XReal f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<XReal> x(n, XReal(b.empty() ? kDefaultPrecision : b[0].precision()));
  for (std::size_t i = n; i-- > 0;) {
    XReal s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

mpz_class binomial_exact(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial_exact: need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial_exact(long n) {
  if (n < 0) throw DomainError("factorial_exact: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

std::mutex g_bern_mutex;
std::vector<mpq_class> g_bern{mpq_class(1)};

std::mutex g_greg_mutex;
std::vector<mpq_class> g_greg{mpq_class(1)};

}  // namespace

mpq_class bernoulli_number(long n) {
  if (n < 0) throw DomainError("bernoulli_number: negative index");
  std::lock_guard lock(g_bern_mutex);
  while (static_cast<long>(g_bern.size()) <= n) {
    const long m = static_cast<long>(g_bern.size());
    if (m > 1 && m % 2 == 1) {
      g_bern.emplace_back(0);
      continue;
    }
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    mpq_class s = 0;
    for (long k = 0; k < m; ++k) {
      if (g_bern[k] != 0) s += mpq_class(binomial_exact(m + 1, k)) * g_bern[k];
    }
    mpq_class b = -s / mpq_class(m + 1);
    b.canonicalize();
    g_bern.push_back(b);
  }
  return g_bern[static_cast<std::size_t>(n)];
}

mpq_class gregory_coefficient(long n) {
  if (n < 0) throw DomainError("gregory_coefficient: negative index");
  std::lock_guard lock(g_greg_mutex);
  while (static_cast<long>(g_greg.size()) <= n) {
    const long m = static_cast<long>(g_greg.size());
    // sum_{k=0}^{m} G_{m-k} (-1)^k / (k+1) = 0
    mpq_class s = 0;
    for (long k = 1; k <= m; ++k) {
      mpq_class t = g_greg[static_cast<std::size_t>(m - k)] / mpq_class(k + 1);
      if (k % 2 == 1) s -= t; else s += t;
    }
    mpq_class g = -s;
    g.canonicalize();
    g_greg.push_back(g);
  }
  return g_greg[static_cast<std::size_t>(n)];
}

}  // namespace stieltjes
