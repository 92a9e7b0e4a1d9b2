#pragma once

// Extended-precision real numbers.
//
// `Real` owns an MPFR value and carries its own precision. Binary operations
// round to the larger precision of their operands, so no process-wide default
// precision is ever consulted or modified.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "harmsum/errors.hpp"

namespace harmsum {

using bits_t = mpfr_prec_t;

/// Extra bits used internally by special functions before rounding back.
inline constexpr bits_t kGuardBits = 32;

class Real {
 public:
  explicit Real(bits_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(long value, bits_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(int value, bits_t bits) : Real(static_cast<long>(value), bits) {}
  /// Exact when bits >= 53.
  Real(double value, bits_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, value, MPFR_RNDN); }

  /// Parses a finite decimal literal; throws std::invalid_argument on malformed text.
  static Real parse(std::string_view text, bits_t bits) {
    Real r(bits);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end == s.c_str() || *end != '\0') {
      throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
    if (!r.is_finite()) throw std::invalid_argument("non-finite number: '" + s + "'");
    return r;
  }

  /// 2^exponent at the given precision.
  static Real pow2(long exponent, bits_t bits) {
    Real r(bits);
    mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
    return r;
  }

  /// 10^exponent, correctly rounded.
  static Real pow10(long exponent, bits_t bits) {
    Real r(bits);
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
    if (exponent < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
  }

  static Real pi(bits_t bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  bits_t bits() const noexcept { return mpfr_get_prec(v_); }

  /// Copy rounded (or exactly widened) to a different precision.
  Real with_bits(bits_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with |x| = m * 2^e, 1/2 <= m < 1. Zero maps to a very negative value.
  long exponent() const noexcept { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  /// `significant` digits in %g style ("0.234163...", "1.5e-45", "0").
  std::string to_string(int significant) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", significant, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.bits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.bits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) noexcept { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }
  friend bool operator==(const Real& a, long b) noexcept { return mpfr_cmp_si(a.v_, b) == 0 && !mpfr_nan_p(a.v_); }
  friend std::partial_ordering operator<=>(const Real& a, long b) noexcept {
    if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }

 private:
  void widen(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

namespace detail {
template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
inline Real unary(const Real& x) {
  Real r(x.bits());
  Fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline Real abs(const Real& x) { return detail::unary<mpfr_abs>(x); }
inline Real sqrt(const Real& x) { return detail::unary<mpfr_sqrt>(x); }
inline Real log(const Real& x) { return detail::unary<mpfr_log>(x); }
inline Real log1p(const Real& x) { return detail::unary<mpfr_log1p>(x); }
inline Real exp(const Real& x) { return detail::unary<mpfr_exp>(x); }
inline Real expm1(const Real& x) { return detail::unary<mpfr_expm1>(x); }
inline Real sin(const Real& x) { return detail::unary<mpfr_sin>(x); }
inline Real cos(const Real& x) { return detail::unary<mpfr_cos>(x); }
inline Real atan(const Real& x) { return detail::unary<mpfr_atan>(x); }
inline Real sinh(const Real& x) { return detail::unary<mpfr_sinh>(x); }
inline Real cosh(const Real& x) { return detail::unary<mpfr_cosh>(x); }
inline Real tanh(const Real& x) { return detail::unary<mpfr_tanh>(x); }
inline Real sqr(const Real& x) { return detail::unary<mpfr_sqr>(x); }

inline Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.bits(), y.bits()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.bits(), y.bits()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline Real pow(const Real& x, long n) {
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

inline Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.bits(), y.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }

/// Working precision expressed in decimal digits.
class PrecisionConfig {
 public:
  static constexpr int kMinDigits = 16;
  static constexpr int kMaxDigits = 1000;

  explicit PrecisionConfig(int decimal_digits = 50) : digits_(decimal_digits) {
    if (decimal_digits < kMinDigits || decimal_digits > kMaxDigits) {
      throw std::invalid_argument("decimal_digits must be in [" + std::to_string(kMinDigits) + ", " +
                                  std::to_string(kMaxDigits) + "], got " + std::to_string(decimal_digits));
    }
  }

  int decimal_digits() const noexcept { return digits_; }
  /// ceil(digits * log2(10)); 16 digits gives 54 bits, 50 digits gives 167.
  bits_t bits() const noexcept { return static_cast<bits_t>(std::ceil(digits_ * 3.321928094887362)); }

  Real real(long v) const { return Real(v, bits()); }
  Real parse(std::string_view text) const { return Real::parse(text, bits()); }
  /// 10^-(digits - offset): the usual "leave `offset` digits of headroom" tolerance.
  Real tolerance(int offset) const { return Real::pow10(-(digits_ - offset), bits()); }
  /// Unit roundoff 2^(1-bits).
  Real epsilon() const { return Real::pow2(1 - static_cast<long>(bits()), bits()); }

  friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;

 private:
  int digits_;
};

}  // namespace harmsum
