#ifndef STIELTJES_SERIES_HPP
#define STIELTJES_SERIES_HPP

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "stieltjes/xreal.hpp"

namespace stieltjes {

struct SeriesResult {
  XReal value;
  long terms_used = 0;
  XReal error_estimate;
  bool converged = false;
};

/// How sum_series treats the tail.
struct Acceleration {
  enum class Kind { None, Richardson };
  Kind kind = Kind::None;
  int depth = 4;

  static Acceleration none() { return {}; }
  static Acceleration richardson(int depth = 4) { return {Kind::Richardson, depth}; }
};

/// Term generator; the index runs from `first` upward.
using TermFn = std::function<XReal(long)>;

struct SeriesOptions {
  long first = 0;
  long max_terms = 1L << 20;
  /// Richardson only: smallest partial sum on the ladder.
  long ladder_start = 16;
};

/// Sums term(first) + term(first+1) + ...
///
/// Plain mode stops once 8 consecutive terms are below tol/16. Richardson mode
/// extrapolates partial sums at N, 2N, 4N, ... as a polynomial in 1/N and stops
/// when successive extrapolants differ by less than tol.
/// Throws NonConvergence when max_terms is exhausted.
SeriesResult sum_series(const TermFn& term, const XReal& tol, Acceleration acc,
                        SeriesOptions opts = {});

/// Neville extrapolation to h = 0 of values sampled at abscissas h.
XReal neville_at_zero(const std::vector<XReal>& h, const std::vector<XReal>& values);

/// Solves the dense square system a x = b by partial pivoting.
std::vector<XReal> solve_linear(std::vector<std::vector<XReal>> a, std::vector<XReal> b);

/// C(n, k) exactly. Throws DomainError for k > n or negative arguments.
mpz_class binomial_exact(long n, long k);
mpz_class factorial_exact(long n);

/// Bernoulli numbers with B_1 = -1/2. Cached; safe for concurrent callers.
mpq_class bernoulli_number(long n);

/// Coefficients G_n of x / log(1 + x) = sum G_n x^n (G_0 = 1, G_1 = 1/2).
mpq_class gregory_coefficient(long n);

}  // namespace stieltjes

#endif  // STIELTJES_SERIES_HPP
