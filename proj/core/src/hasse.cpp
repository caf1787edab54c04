#include "stieltjes/hasse.hpp"

#include <algorithm>
#include <cmath>

#include "stieltjes/series.hpp"

namespace stieltjes {

namespace {

void require_positive(const XReal& u, const char* who) {
  if (!(u > 0) || !u.is_finite()) throw DomainError(std::string(who) + ": u must be positive");
}

std::vector<XReal> partial_sums(const std::vector<XReal>& terms) {
  std::vector<XReal> out;
  out.reserve(terms.size());
  XReal s(terms.front().precision());
  for (const XReal& t : terms) {
    s += t;
    out.push_back(s);
  }
  return out;
}

std::vector<long> ladder(long lo, long hi, int points) {
  std::vector<long> ns;
  for (int i = 0; i < points; ++i) {
    double f = points == 1 ? 1.0 : static_cast<double>(i) / (points - 1);
    long n = static_cast<long>(std::floor(lo * std::pow(static_cast<double>(hi) / lo, f)));
    if (!ns.empty() && n <= ns.back()) n = ns.back() + 1;
    ns.push_back(std::min(n, hi));
  }
  if (std::adjacent_find(ns.begin(), ns.end()) != ns.end()) {
    throw DomainError("Hasse tail model: n_max too small for the requested depth");
  }
  return ns;
}

// Fits S_N = A + sum_{k<=K, m<=M} c_km (log log N)^m / ((log N)^k N^u) exactly
// on a geometric ladder in [n_max/4, n_max] and returns A.
XReal tail_limit(const std::vector<XReal>& partial, const XReal& u, long loglog_order, int depth,
                 Bits prec) {
  const long n_max = static_cast<long>(partial.size()) - 1;
  const int points = 1 + depth * static_cast<int>(loglog_order + 1);
  const std::vector<long> ns = ladder(n_max / 4, n_max, points);
  const XReal ur = u.rounded(prec);
  std::vector<std::vector<XReal>> a;
  std::vector<XReal> b;
  for (long n : ns) {
    XReal nn(n, prec);
    XReal l = log(nn), ll = log(l), nu = pow(nn, ur);
    std::vector<XReal> row{XReal(1L, prec)};
    XReal lk = l;
    for (int k = 1; k <= depth; ++k, lk *= l) {
      XReal llm(1L, prec);
      for (long m = 0; m <= loglog_order; ++m, llm *= ll) row.push_back(-llm / (lk * nu));
    }
    a.push_back(std::move(row));
    b.push_back(partial[static_cast<std::size_t>(n)].rounded(prec));
  }
  return solve_linear(std::move(a), std::move(b)).front();
}

struct Extrapolated {
  XReal value;
  XReal error;
};

Extrapolated extrapolate(const std::vector<XReal>& partial, const XReal& u, long loglog_order,
                         int depth) {
  if (depth < 2) throw DomainError("Hasse tail model: richardson_depth must be at least 2");
  const Bits prec = max(u.precision(), Bits{256}) + 64;
  XReal hi = tail_limit(partial, u, loglog_order, depth, prec);
  XReal lo = tail_limit(partial, u, loglog_order, depth - 1, prec);
  return {hi, abs(hi - lo)};
}

std::vector<XReal> samples(const XReal& u, long count, Bits prec, long r, long p) {
  std::vector<XReal> out;
  out.reserve(static_cast<std::size_t>(count));
  const XReal ug = u.rounded(prec);
  for (long j = 0; j < count; ++j) {
    XReal x = ug + j;
    XReal v(1L, prec);
    if (p > 0) v = pow(log(x), p);
    if (r != 1) v *= pow(x, r - 1);
    out.push_back(std::move(v));
  }
  return out;
}

StieltjesValue hasse_series(long p, const XReal& u, const HasseConfig& cfg, long power) {
  require_positive(u, "stieltjes_gamma");
  if (p < 0) throw DomainError("stieltjes_gamma: order must be non-negative");
  if (cfg.n_max < 64) throw DomainError("stieltjes_gamma: n_max must be at least 64");
  const long guard = cfg.effective_guard();
  if (guard < cfg.n_max) {
    throw PrecisionTooLow("stieltjes_gamma: guard_bits below n_max cannot absorb the cancellation");
  }
  const Bits work{std::max(guard, u.precision().value + 64)};
  auto terms = hasse_outer_terms(samples(u, cfg.n_max + 1, work, 1, power));
  auto ex = extrapolate(partial_sums(terms), u, p, cfg.richardson_depth);
  StieltjesValue out;
  out.p = p;
  out.u = u;
  out.value = ex.value.rounded(u.precision());
  out.error_estimate = ex.error.rounded(u.precision());
  out.terms_used = cfg.n_max + 1;
  return out;
}

}  // namespace

std::vector<XReal> hasse_outer_terms(std::vector<XReal> a) {
  std::vector<XReal> out;
  if (a.empty()) return out;
  out.reserve(a.size());
  std::size_t live = a.size();
  for (std::size_t n = 0; n < a.size(); ++n) {
    XReal t = a[0] / static_cast<long>(n + 1);
    out.push_back(n % 2 == 0 ? t : -t);
    // a_j <- a_{j+1} - a_j
    for (std::size_t j = 0; j + 1 < live; ++j) {
      mpfr_sub(a[j].raw(), a[j + 1].get(), a[j].get(), MPFR_RNDN);
    }
    --live;
  }
  return out;
}

XReal inner_alt_sum(long n, const XReal& u, long p, long r) {
  if (n < 0 || p < 0) throw DomainError("inner_alt_sum: n and p must be non-negative");
  require_positive(u, "inner_alt_sum");
  const Bits prec = u.precision();
  if (prec.value < n + 64) {
    throw PrecisionTooLow("inner_alt_sum: need at least " + std::to_string(n + 64) +
                          " bits for n = " + std::to_string(n) + ", have " +
                          std::to_string(prec.value));
  }
  XReal s(prec);
  for (long j = 0; j <= n; ++j) {
    XReal x = u + j;
    XReal v(binomial_exact(n, j), prec);
    if (p > 0) v *= pow(log(x), p);
    if (r != 1) v *= pow(x, r - 1);
    if (j % 2 == 0) s += v; else s -= v;
  }
  return s;
}

StieltjesValue stieltjes_gamma(long p, const XReal& u, const HasseConfig& cfg) {
  StieltjesValue v = hasse_series(p, u, cfg, p + 1);
  v.value = -v.value / (p + 1);
  v.error_estimate /= (p + 1);
  if (v.error_estimate > XReal(cfg.tolerance, u.precision())) {
    throw NonConvergence("stieltjes_gamma: tail estimate " + v.error_estimate.to_string(4) +
                         " exceeds tolerance for p = " + std::to_string(p));
  }
  return v;
}

StieltjesValue digamma_hasse(const XReal& u, const HasseConfig& cfg) {
  StieltjesValue v = hasse_series(0, u, cfg, 1);
  if (v.error_estimate > XReal(cfg.tolerance, u.precision())) {
    throw NonConvergence("digamma_hasse: tail estimate " + v.error_estimate.to_string(4) +
                         " exceeds tolerance");
  }
  return v;
}

std::vector<XReal> eta_sequence(long K, const std::vector<XReal>& gammas) {
  if (K < 0) throw DomainError("eta_sequence: negative K");
  if (static_cast<long>(gammas.size()) <= K) {
    throw DomainError("eta_sequence: need gamma_0..gamma_K");
  }
  Bits prec = kMinPrecision;
  for (const XReal& g : gammas) prec = max(prec, g.precision());
  std::vector<XReal> eta;
  for (long n = 0; n <= K; ++n) {
    XReal s = gammas[static_cast<std::size_t>(n)] * (n + 1) / XReal(factorial_exact(n), prec);
    for (long k = 0; k < n; ++k) {
      XReal t = gammas[static_cast<std::size_t>(n - k - 1)] * eta[static_cast<std::size_t>(k)] /
                XReal(factorial_exact(n - k - 1), prec);
      if (k % 2 == 0) s -= t; else s += t;
    }
    eta.push_back(n % 2 == 1 ? s : -s);
  }
  return eta;
}

XReal S_partial(long r, const XReal& u, long p, long N, bool include_n0) {
  if (N < 1) throw DomainError("S_partial: N must be at least 1");
  if (p < 0) throw DomainError("S_partial: p must be non-negative");
  require_positive(u, "S_partial");
  const Bits work = u.precision() + (N + 64);
  auto terms = hasse_outer_terms(samples(u, N + 1, work, r, p));
  XReal s(work);
  for (std::size_t n = include_n0 ? 0 : 1; n < terms.size(); ++n) s += terms[n];
  return s.rounded(u.precision());
}

mpq_class bernoulli_hasse(long k, const mpq_class& a) {
  if (k < 0) throw DomainError("bernoulli_hasse: negative degree");
  mpq_class total = 0;
  for (long n = 0; n <= k; ++n) {
    mpq_class inner = 0;
    for (long j = 0; j <= n; ++j) {
      mpq_class x = a + j, pw = 1;
      for (long e = 0; e < k; ++e) pw *= x;
      mpq_class t = mpq_class(binomial_exact(n, j)) * pw;
      if (j % 2 == 0) inner += t; else inner -= t;
    }
    total += inner / (n + 1);
  }
  total.canonicalize();
  return total;
}

XReal bernoulli_hasse(long k, const XReal& a) {
  if (k < 0) throw DomainError("bernoulli_hasse: negative degree");
  const Bits work = a.precision() + (4 * k + 64);
  const XReal ag = a.rounded(work);
  std::vector<XReal> vals;
  for (long j = 0; j <= k; ++j) vals.push_back(pow(ag + j, k));
  auto terms = hasse_outer_terms(std::move(vals));
  XReal s(work);
  for (const XReal& t : terms) s += t;
  return s.rounded(a.precision());
}

XReal hasse_zeta_check(long s, const XReal& u, long N) {
  if (s < 2) throw DomainError("hasse_zeta_check: need s >= 2");
  if (N < 0) throw DomainError("hasse_zeta_check: negative N");
  require_positive(u, "hasse_zeta_check");
  const Bits work = u.precision() + (N + 64);
  auto terms = hasse_outer_terms(samples(u, N + 1, work, 2 - s, 0));
  XReal total(work);
  for (const XReal& t : terms) total += t;
  return total.rounded(u.precision());
}

mpq_class harmonic(long n) {
  if (n < 0) throw DomainError("harmonic: negative n");
  mpq_class h = 0;
  for (long k = 1; k <= n; ++k) h += mpq_class(1, k);
  h.canonicalize();
  return h;
}

}  // namespace stieltjes
