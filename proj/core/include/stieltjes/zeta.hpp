#ifndef STIELTJES_ZETA_HPP
#define STIELTJES_ZETA_HPP

#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// zeta(s) for integer s >= 2.
XReal riemann_zeta(long s, Bits prec);

/// zeta(s, x) = sum_{k>=0} (k + x)^(-s) for integer s >= 2 and x > 0.
/// Result precision is that of x.
XReal hurwitz_zeta(long s, const XReal& x);

/// d/ds zeta(s, x) at integer s >= 2.
XReal hurwitz_zeta_ds(long s, const XReal& x);

/// zeta'(2) = -sum log n / n^2.
XReal zeta_prime_2(Bits prec);

/// zeta'(-1), obtained from zeta'(2) through the functional equation.
XReal zeta_prime_minus_one(Bits prec);

}  // namespace stieltjes

#endif  // STIELTJES_ZETA_HPP
