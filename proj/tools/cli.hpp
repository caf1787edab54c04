#ifndef STIELTJES_TOOLS_CLI_HPP
#define STIELTJES_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "stieltjes/audit.hpp"

namespace stieltjes::cli {

enum ExitCode : int {
  kOk = 0,
  kRigorousFailure = 1,
  kUsage = 2,
  kNonConvergence = 3,
  kIo = 4,
};

/// Exit status of a verify run: 1 if a rigorous case failed or errored,
/// otherwise 3 if any case hit non-convergence, otherwise 0. Audit deviations
/// never fail the run.
int exit_code_for(const std::vector<AuditReport>& reports);

/// Decimal string with `digits` significant digits; positional for moderate
/// magnitudes, scientific otherwise.
std::string decimal(const XReal& x, int digits);

/// Significant digits printed for values computed at `prec`.
int value_digits(Bits prec);

/// Entry point. `cases` replaces the built-in registry when non-null.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::vector<IdentityCase>* cases = nullptr);

}  // namespace stieltjes::cli

#endif  // STIELTJES_TOOLS_CLI_HPP
