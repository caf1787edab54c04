#ifndef STIELTJES_GAMMA_HPP
#define STIELTJES_GAMMA_HPP

#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// psi(x) for x > 0, by upward recurrence and the asymptotic series.
XReal digamma(const XReal& x);

/// psi^(p)(x) = (-1)^(p+1) p! zeta(p+1, x), p >= 1.
XReal polygamma(long p, const XReal& x);

/// Euler's constant as -psi(1).
XReal euler_gamma(Bits prec);

XReal log_gamma(const XReal& x);
XReal gamma(const XReal& x);

/// Gamma^(m)(x) = Gamma(x) * Y_m(psi(x), psi'(x), ..., psi^(m-1)(x)).
XReal gamma_derivative(long m, const XReal& x);

/// log Gamma(1 + t) = log t! for integer t >= 1.
XReal log_gamma_integer(long t, Bits prec);

}  // namespace stieltjes

#endif  // STIELTJES_GAMMA_HPP
