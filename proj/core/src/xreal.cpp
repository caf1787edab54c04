#include "stieltjes/xreal.hpp"

#include <cstdlib>
#include <ostream>
#include <vector>

namespace stieltjes {

namespace {

mpfr_prec_t checked(Bits prec) {
  if (prec < kMinPrecision) {
    throw DomainError("precision below 64 bits: " + std::to_string(prec.value));
  }
  return static_cast<mpfr_prec_t>(prec.value);
}

Bits wider(const XReal& a, const XReal& b) { return max(a.precision(), b.precision()); }

template <typename Fn>
XReal unary(const XReal& x, Fn fn) {
  XReal r(x.precision());
  fn(r.raw(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

XReal::XReal(Bits prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_zero(v_, 1);
}

XReal::XReal(long v, Bits prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

XReal::XReal(double v, Bits prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

XReal::XReal(const mpz_class& v, Bits prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

XReal::XReal(const mpq_class& v, Bits prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

XReal XReal::parse(std::string_view text, Bits prec) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    XReal num = parse(s.substr(0, slash), prec + 32);
    XReal den = parse(s.substr(slash + 1), prec + 32);
    if (den.is_zero()) throw DomainError("zero denominator in '" + s + "'");
    return (num / den).rounded(prec);
  }
  XReal r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !r.is_finite()) {
    throw DomainError("not a number: '" + s + "'");
  }
  char* end = nullptr;
  mpfr_t probe;
  mpfr_init2(probe, 64);
  mpfr_strtofr(probe, s.c_str(), &end, 10, MPFR_RNDN);
  mpfr_clear(probe);
  if (s.empty() || end == nullptr || *end != '\0') {
    throw DomainError("not a number: '" + s + "'");
  }
  return r;
}

XReal::XReal(const XReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

XReal::XReal(XReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

XReal& XReal::operator=(const XReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

XReal& XReal::operator=(XReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

XReal::~XReal() { mpfr_clear(v_); }

XReal XReal::rounded(Bits prec) const {
  XReal r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long XReal::exponent() const {
  if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? -(1L << 40) : (1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string XReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string XReal::to_fixed(int decimals) const {
  if (decimals < 0) decimals = 0;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", decimals, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

XReal XReal::operator-() const {
  XReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

// Compound assignment widens the left operand when the right one is wider.
#define STIELTJES_COMPOUND(op, fn)                                      \
  XReal& XReal::operator op(const XReal& o) {                          \
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {                      \
      mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);              \
    }                                                                   \
    fn(v_, v_, o.v_, MPFR_RNDN);                                        \
    return *this;                                                       \
  }
STIELTJES_COMPOUND(+=, mpfr_add)
STIELTJES_COMPOUND(-=, mpfr_sub)
STIELTJES_COMPOUND(*=, mpfr_mul)
STIELTJES_COMPOUND(/=, mpfr_div)
#undef STIELTJES_COMPOUND

XReal& XReal::operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
XReal& XReal::operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
XReal& XReal::operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
XReal& XReal::operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

#define STIELTJES_BINARY(op, fn)                              \
  XReal operator op(const XReal& a, const XReal& b) {        \
    XReal r(wider(a, b));                                     \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                          \
    return r;                                                 \
  }
STIELTJES_BINARY(+, mpfr_add)
STIELTJES_BINARY(-, mpfr_sub)
STIELTJES_BINARY(*, mpfr_mul)
STIELTJES_BINARY(/, mpfr_div)
#undef STIELTJES_BINARY

XReal XReal::rsub(long a, const XReal& b) {
  XReal r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

XReal XReal::rdiv(long a, const XReal& b) {
  XReal r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const XReal& a, const XReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const XReal& x) {
  int digits = static_cast<int>(os.precision());
  return os << x.to_string(digits > 0 ? digits : 17);
}

XReal abs(const XReal& x) { return unary(x, mpfr_abs); }
XReal sqrt(const XReal& x) { return unary(x, mpfr_sqrt); }
XReal log(const XReal& x) { return unary(x, mpfr_log); }
XReal log1p(const XReal& x) { return unary(x, mpfr_log1p); }
XReal exp(const XReal& x) { return unary(x, mpfr_exp); }
XReal expm1(const XReal& x) { return unary(x, mpfr_expm1); }
XReal sinh(const XReal& x) { return unary(x, mpfr_sinh); }
XReal cosh(const XReal& x) { return unary(x, mpfr_cosh); }
XReal asinh(const XReal& x) { return unary(x, mpfr_asinh); }

XReal pow(const XReal& x, const XReal& y) {
  XReal r(wider(x, y));
  mpfr_pow(r.raw(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

XReal pow(const XReal& x, long n) {
  XReal r(x.precision());
  mpfr_pow_si(r.raw(), x.get(), n, MPFR_RNDN);
  return r;
}

XReal ldexp(const XReal& x, long e) {
  XReal r(x.precision());
  mpfr_mul_2si(r.raw(), x.get(), e, MPFR_RNDN);
  return r;
}

XReal min(const XReal& a, const XReal& b) { return a <= b ? a : b; }
XReal max(const XReal& a, const XReal& b) { return a >= b ? a : b; }

XReal pi(Bits prec) {
  XReal r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

XReal log2_const(Bits prec) {
  XReal r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

XReal epsilon(Bits prec) { return ldexp(XReal(1L, prec), 1 - prec.value); }

}  // namespace stieltjes
