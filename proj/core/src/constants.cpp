#include "stieltjes/constants.hpp"

#include "stieltjes/gamma.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {

ConstantPool::ConstantPool(Bits prec, HasseConfig hasse) : prec_(prec), hasse_(hasse) {
  if (prec < kMinPrecision) throw DomainError("ConstantPool: precision below 64 bits");
}

Estimate ConstantPool::memo(const std::string& key, const std::function<Estimate()>& make) {
  std::shared_future<Estimate> fut;
  std::promise<Estimate> mine;
  bool owner = false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      fut = mine.get_future().share();
      cache_.emplace(key, fut);
      owner = true;
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      mine.set_value(make());
    } catch (...) {
      mine.set_exception(std::current_exception());
    }
  }
  return fut.get();
}

namespace {
Estimate exact(XReal v) {
  XReal e(v.precision());
  return {std::move(v), std::move(e), 0};
}
}  // namespace

XReal ConstantPool::euler_gamma() {
  return memo("gamma", [&] { return exact(stieltjes::euler_gamma(prec_)); }).value;
}

XReal ConstantPool::pi() {
  return memo("pi", [&] { return exact(stieltjes::pi(prec_)); }).value;
}

XReal ConstantPool::log_two_pi() {
  return memo("log2pi", [&] { return exact(log(pi() * 2)); }).value;
}

XReal ConstantPool::zeta(long s) {
  return memo("zeta" + std::to_string(s), [&] { return exact(riemann_zeta(s, prec_)); }).value;
}

XReal ConstantPool::zeta_prime_2() {
  return memo("zeta'2", [&] { return exact(stieltjes::zeta_prime_2(prec_)); }).value;
}

XReal ConstantPool::zeta_prime_minus_one() {
  return memo("zeta'-1", [&] { return exact(stieltjes::zeta_prime_minus_one(prec_)); }).value;
}

XReal ConstantPool::gamma_derivative_at_1(long m) {
  return memo("Gamma" + std::to_string(m), [&] {
           return exact(gamma_derivative(m, XReal(1L, prec_)));
         }).value;
}

Estimate ConstantPool::stieltjes(long p, const mpq_class& u) {
  return memo("gamma_" + std::to_string(p) + "@" + u.get_str(), [&] {
    StieltjesValue s = stieltjes_gamma(p, XReal(u, prec_), hasse_);
    return Estimate{s.value, s.error_estimate, s.terms_used};
  });
}

Estimate ConstantPool::dn(long n) {
  return memo("d" + std::to_string(n), [&] {
    QuadResult q = integrate_unit(
        [n](const XReal& y, const XReal& c) {
          return omega_kernel(y, c) * loglog_power_kernel(y, c, static_cast<int>(n));
        },
        audit_quadrature_tolerance(prec_));
    if (n % 2 != 0) q.value = -q.value;
    return Estimate{q.value, q.error_estimate, q.evaluations};
  });
}

XReal audit_quadrature_tolerance(Bits prec) {
  return ldexp(XReal(1L, prec), -(prec.value - 32));
}

}  // namespace stieltjes
