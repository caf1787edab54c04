#ifndef STIELTJES_CONSTANTS_HPP
#define STIELTJES_CONSTANTS_HPP

#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <string>

#include <gmpxx.h>

#include "stieltjes/hasse.hpp"
#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// A value with an error estimate and a work counter.
struct Estimate {
  XReal value;
  XReal error;
  long work = 0;
};

/// Memo of constants shared by all auditor cases of one run.
///
/// Each entry is computed once, by the first caller; concurrent callers of the
/// same entry wait for it. Failures are cached too and rethrown on every call.
class ConstantPool {
 public:
  explicit ConstantPool(Bits prec, HasseConfig hasse = {});

  Bits precision() const { return prec_; }
  const HasseConfig& hasse_config() const { return hasse_; }

  XReal euler_gamma();
  XReal pi();
  XReal log_two_pi();
  /// zeta(s), integer s >= 2.
  XReal zeta(long s);
  XReal zeta_prime_2();
  XReal zeta_prime_minus_one();
  /// Gamma^(m)(1) through Bell polynomials in the polygamma values.
  XReal gamma_derivative_at_1(long m);
  /// gamma_p(u) from the Hasse series.
  Estimate stieltjes(long p, const mpq_class& u);
  /// d_n with int_0^1 Omega(y) log^n|log y| dy = (-1)^n d_n, by quadrature.
  Estimate dn(long n);

 private:
  Estimate memo(const std::string& key, const std::function<Estimate()>& make);

  Bits prec_;
  HasseConfig hasse_;
  std::mutex mu_;
  std::map<std::string, std::shared_future<Estimate>> cache_;
};

/// Quadrature tolerance used for auditor integrals at precision `prec`.
XReal audit_quadrature_tolerance(Bits prec);

}  // namespace stieltjes

#endif  // STIELTJES_CONSTANTS_HPP
