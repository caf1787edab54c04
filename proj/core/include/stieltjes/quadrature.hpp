#ifndef STIELTJES_QUADRATURE_HPP
#define STIELTJES_QUADRATURE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "stieltjes/xreal.hpp"

namespace stieltjes {

struct QuadResult {
  XReal value;
  XReal error_estimate;
  long evaluations = 0;
  bool converged = false;
  /// |I_L - I_{L-1}| for each refinement past the first.
  std::vector<XReal> level_differences;
};

struct QuadOptions {
  int max_level = 12;
  int min_level = 3;
  /// Working precision; 0 means "use the tolerance's precision".
  long precision = 0;
  /// Throw NonConvergence instead of returning converged = false.
  bool throw_on_failure = true;
};

/// Integrand on (0, 1). Receives x and 1 - x, both accurate. An empty optional
/// marks an excluded point, which contributes nothing.
using UnitIntegrand = std::function<std::optional<XReal>(const XReal& x, const XReal& xc)>;
/// Integrand on (0, inf).
using HalfLineIntegrand = std::function<std::optional<XReal>(const XReal& x)>;

/// Tanh-sinh quadrature. Levels halve the step until two successive estimates
/// differ by at most tol/2. Non-finite integrand values throw DomainError.
QuadResult integrate_unit(const UnitIntegrand& f, const XReal& tol, QuadOptions opts = {});

/// Exp-sinh quadrature with the same refinement contract.
QuadResult integrate_halfline(const HalfLineIntegrand& f, const XReal& tol, QuadOptions opts = {});

}  // namespace stieltjes

#endif  // STIELTJES_QUADRATURE_HPP
