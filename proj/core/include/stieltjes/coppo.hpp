#ifndef STIELTJES_COPPO_HPP
#define STIELTJES_COPPO_HPP

#include <vector>

#include "stieltjes/quadrature.hpp"
#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// p_n(z) = a_0 + a_1 z + ... + a_n z^n.
struct CoppoPoly {
  long n = 0;
  std::vector<XReal> a;

  XReal operator()(const XReal& z) const;
};

/// The monic p_n with x^n = int_0^inf p_n(x - log z) e^(-z) dz, from the
/// unit-triangular system sum_l (-1)^l C(k+l,l) Gamma^(l)(1) a_{k+l} = [k = n].
CoppoPoly coppo_polynomial(long n, Bits prec);

/// int_0^inf p_n(x - log z) e^(-z) dz by exp-sinh quadrature. n <= 6.
QuadResult coppo_moment_check(long n, const XReal& x);

/// gamma_n = int_0^1 p_n(-log log(1/t)) [1/log t - 1/(t-1)] dt. n <= 4.
QuadResult stieltjes_via_coppo(long n, Bits prec);

}  // namespace stieltjes

#endif  // STIELTJES_COPPO_HPP
