#ifndef STIELTJES_POLYLOG_HPP
#define STIELTJES_POLYLOG_HPP

#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// Li_2(x) on [0, 1].
XReal dilog(const XReal& x);

/// Li_2(x) with xc = 1 - x supplied separately.
XReal dilog(const XReal& x, const XReal& xc);

/// li(x) = gamma + log(-log x) + sum_{n>=1} log^n x / (n! n) on (0, 1).
XReal li_nielsen(const XReal& x);
XReal li_nielsen(const XReal& x, const XReal& xc);

}  // namespace stieltjes

#endif  // STIELTJES_POLYLOG_HPP
