#ifndef STIELTJES_KERNELS_HPP
#define STIELTJES_KERNELS_HPP

#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// Omega(y) = 1/(1-y) + 1/log y on (0, 1).
XReal omega_kernel(const XReal& y);

/// Omega with the complement c = 1 - y supplied separately, so that points
/// close to 1 keep their full relative accuracy.
XReal omega_kernel(const XReal& y, const XReal& c);

/// 1/(e^x - 1) - 1/x for x > 0.
XReal bose_kernel(const XReal& x);

/// (log(-log y))^n on (0, 1).
XReal loglog_power_kernel(const XReal& y, int n);
XReal loglog_power_kernel(const XReal& y, const XReal& c, int n);

/// -log y, accurate near y = 1 when c = 1 - y is given.
XReal neg_log(const XReal& y, const XReal& c);

}  // namespace stieltjes

#endif  // STIELTJES_KERNELS_HPP
