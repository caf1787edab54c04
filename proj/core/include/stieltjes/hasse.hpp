#ifndef STIELTJES_HASSE_HPP
#define STIELTJES_HASSE_HPP

#include <vector>

#include <gmpxx.h>

#include "stieltjes/xreal.hpp"

namespace stieltjes {

struct HasseConfig {
  long n_max = 2048;
  /// Working precision for the alternating inner sums; 0 means n_max + 128.
  long guard_bits = 0;
  /// Number of inverse-log orders in the tail model.
  int richardson_depth = 4;
  double tolerance = 1e-6;

  long effective_guard() const { return guard_bits > 0 ? guard_bits : n_max + 128; }
};

struct StieltjesValue {
  long p = 0;
  XReal u;
  XReal value;
  XReal error_estimate;
  long terms_used = 0;
};

/// sum_{j=0}^{n} C(n,j) (-1)^j (u+j)^(r-1) log^p(u+j), evaluated at the
/// precision of u. Throws PrecisionTooLow when that is below n + 64 bits.
XReal inner_alt_sum(long n, const XReal& u, long p, long r);

/// gamma_p(u) = -1/(p+1) sum_n 1/(n+1) sum_j C(n,j) (-1)^j log^(p+1)(u+j),
/// truncated at n_max and extrapolated. Throws NonConvergence when the tail
/// estimate exceeds cfg.tolerance. The value carries the precision of u.
StieltjesValue stieltjes_gamma(long p, const XReal& u, const HasseConfig& cfg = {});

/// psi(u) = sum_n 1/(n+1) sum_j C(n,j) (-1)^j log(u+j).
StieltjesValue digamma_hasse(const XReal& u, const HasseConfig& cfg = {});

/// eta_0..eta_K from gamma_0..gamma_K by the recurrence
/// eta_n = (-1)^(n+1) [ (n+1)/n! gamma_n + sum_k (-1)^(k+1)/(n-k-1)! gamma_{n-k-1} eta_k ].
std::vector<XReal> eta_sequence(long K, const std::vector<XReal>& gammas);

/// Partial sum over n <= N of the outer series S(r,u,p) (from n = 1) or
/// S_0(r,u,p) (from n = 0).
XReal S_partial(long r, const XReal& u, long p, long N, bool include_n0);

/// B_k(a) via the finite double sum sum_{n<=k} 1/(n+1) sum_j C(n,j) (-1)^j (a+j)^k.
XReal bernoulli_hasse(long k, const XReal& a);
mpq_class bernoulli_hasse(long k, const mpq_class& a);

/// sum_{n<=N} 1/(n+1) sum_j C(n,j) (-1)^j (u+j)^(1-s); tends to (s-1) zeta(s, u).
XReal hasse_zeta_check(long s, const XReal& u, long N);

/// H_n exactly.
mpq_class harmonic(long n);

/// Outer terms t_n = 1/(n+1) sum_j C(n,j)(-1)^j g(u+j) for n = 0..N, given
/// the samples g(u), g(u+1), ..., g(u+N). Uses a rolling difference column.
std::vector<XReal> hasse_outer_terms(std::vector<XReal> samples);

}  // namespace stieltjes

#endif  // STIELTJES_HASSE_HPP
