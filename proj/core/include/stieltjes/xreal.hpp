#ifndef STIELTJES_XREAL_HPP
#define STIELTJES_XREAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "stieltjes/errors.hpp"

namespace stieltjes {

/// Precision of an XReal in bits.
struct Bits {
  long value = 256;

  constexpr Bits() = default;
  constexpr explicit Bits(long v) : value(v) {}

  friend constexpr auto operator<=>(Bits, Bits) = default;
  constexpr Bits operator+(long extra) const { return Bits{value + extra}; }
};

inline constexpr Bits kMinPrecision{64};
inline constexpr Bits kDefaultPrecision{256};

inline constexpr Bits max(Bits a, Bits b) { return a.value >= b.value ? a : b; }

/// Arbitrary-precision real backed by MPFR.
///
/// Every value carries its own precision. Binary operations produce a result
/// at the larger of the two operand precisions; integer operands are exact.
/// All rounding is to nearest.
class XReal {
 public:
  /// Zero at the default precision.
  XReal() : XReal(kDefaultPrecision) {}
  /// Zero at `prec`.
  explicit XReal(Bits prec);
  XReal(long v, Bits prec);
  XReal(int v, Bits prec) : XReal(static_cast<long>(v), prec) {}
  XReal(double v, Bits prec);
  XReal(const mpz_class& v, Bits prec);
  XReal(const mpq_class& v, Bits prec);

  /// Parses a decimal string such as "0.5", "-1e-30" or "1/3".
  static XReal parse(std::string_view text, Bits prec);

  XReal(const XReal& other);
  XReal(XReal&& other) noexcept;
  XReal& operator=(const XReal& other);
  XReal& operator=(XReal&& other) noexcept;
  ~XReal();

  Bits precision() const { return Bits{static_cast<long>(mpfr_get_prec(v_))}; }

  /// Copy rounded (or widened) to `prec`.
  XReal rounded(Bits prec) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const;

  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  XReal operator-() const;

  XReal& operator+=(const XReal& o);
  XReal& operator-=(const XReal& o);
  XReal& operator*=(const XReal& o);
  XReal& operator/=(const XReal& o);
  XReal& operator+=(long o);
  XReal& operator-=(long o);
  XReal& operator*=(long o);
  XReal& operator/=(long o);
  // Doubles would silently convert to long; spell them as XReal instead.
  template <std::floating_point F> XReal& operator+=(F) = delete;
  template <std::floating_point F> XReal& operator-=(F) = delete;
  template <std::floating_point F> XReal& operator*=(F) = delete;
  template <std::floating_point F> XReal& operator/=(F) = delete;

  friend XReal operator+(const XReal& a, const XReal& b);
  friend XReal operator-(const XReal& a, const XReal& b);
  friend XReal operator*(const XReal& a, const XReal& b);
  friend XReal operator/(const XReal& a, const XReal& b);

  template <std::integral I>
  friend XReal operator+(const XReal& a, I b) { XReal r(a); r += static_cast<long>(b); return r; }
  template <std::integral I>
  friend XReal operator-(const XReal& a, I b) { XReal r(a); r -= static_cast<long>(b); return r; }
  template <std::integral I>
  friend XReal operator*(const XReal& a, I b) { XReal r(a); r *= static_cast<long>(b); return r; }
  template <std::integral I>
  friend XReal operator/(const XReal& a, I b) { XReal r(a); r /= static_cast<long>(b); return r; }
  template <std::integral I>
  friend XReal operator+(I a, const XReal& b) { return b + a; }
  template <std::integral I>
  friend XReal operator-(I a, const XReal& b) { return rsub(static_cast<long>(a), b); }
  template <std::integral I>
  friend XReal operator*(I a, const XReal& b) { return b * a; }
  template <std::integral I>
  friend XReal operator/(I a, const XReal& b) { return rdiv(static_cast<long>(a), b); }

  template <std::floating_point F> friend XReal operator+(const XReal&, F) = delete;
  template <std::floating_point F> friend XReal operator-(const XReal&, F) = delete;
  template <std::floating_point F> friend XReal operator*(const XReal&, F) = delete;
  template <std::floating_point F> friend XReal operator/(const XReal&, F) = delete;
  template <std::floating_point F> friend XReal operator+(F, const XReal&) = delete;
  template <std::floating_point F> friend XReal operator-(F, const XReal&) = delete;
  template <std::floating_point F> friend XReal operator*(F, const XReal&) = delete;
  template <std::floating_point F> friend XReal operator/(F, const XReal&) = delete;

  friend bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const XReal& a, const XReal& b);
  template <std::integral I>
  friend bool operator==(const XReal& a, I b) { return cmp_long(a, static_cast<long>(b)) == 0; }
  template <std::integral I>
  friend std::partial_ordering operator<=>(const XReal& a, I b) {
    if (a.is_nan()) return std::partial_ordering::unordered;
    int c = cmp_long(a, static_cast<long>(b));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  template <std::floating_point F> friend bool operator==(const XReal&, F) = delete;
  template <std::floating_point F> friend std::partial_ordering operator<=>(const XReal&, F) = delete;

  friend std::ostream& operator<<(std::ostream& os, const XReal& x);

 private:
  static XReal rsub(long a, const XReal& b);
  static XReal rdiv(long a, const XReal& b);
  static int cmp_long(const XReal& a, long b) { return mpfr_cmp_si(a.v_, b); }

  mpfr_t v_;
};

// Elementary functions. Results carry the argument's precision.
XReal abs(const XReal& x);
XReal sqrt(const XReal& x);
XReal log(const XReal& x);
XReal log1p(const XReal& x);
XReal exp(const XReal& x);
XReal expm1(const XReal& x);
XReal sinh(const XReal& x);
XReal cosh(const XReal& x);
XReal asinh(const XReal& x);
XReal pow(const XReal& x, const XReal& y);
XReal pow(const XReal& x, long n);
/// 2^e exactly.
XReal ldexp(const XReal& x, long e);
XReal min(const XReal& a, const XReal& b);
XReal max(const XReal& a, const XReal& b);

XReal pi(Bits prec);
XReal log2_const(Bits prec);

/// Unit roundoff 2^(1 - prec).
XReal epsilon(Bits prec);

}  // namespace stieltjes

#endif  // STIELTJES_XREAL_HPP
