#pragma once

#include <string>

#include "harmsum/real.hpp"

namespace harmsum {

/// Complex number with extended-precision components.
struct Complex {
  Real re;
  Real im;

  explicit Complex(bits_t bits) : re(bits), im(bits) {}
  explicit Complex(Real real) : re(std::move(real)), im(re.bits()) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}

  static Complex i(bits_t bits) { return Complex(Real(0L, bits), Real(1L, bits)); }
  /// e^{i theta}
  static Complex polar_unit(const Real& theta) { return Complex(cos(theta), sin(theta)); }

  bits_t bits() const noexcept { return std::max(re.bits(), im.bits()); }
  bool is_finite() const noexcept { return re.is_finite() && im.is_finite(); }
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  Complex with_bits(bits_t bits) const { return Complex(re.with_bits(bits), im.with_bits(bits)); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const Real d = sqr(o.re) + sqr(o.im);
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex& operator+=(const Real& o) { re += o; return *this; }
  Complex& operator-=(const Real& o) { re -= o; return *this; }
  Complex& operator*=(const Real& o) { re *= o; im *= o; return *this; }
  Complex& operator/=(const Real& o) { re /= o; im /= o; return *this; }
  Complex& operator*=(long o) { re *= o; im *= o; return *this; }
  Complex& operator/=(long o) { re /= o; im /= o; return *this; }

  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator+(Complex a, const Real& b) { return a += b; }
  friend Complex operator-(Complex a, const Real& b) { return a -= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator+(const Real& a, Complex b) { return b += a; }
  friend Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re, -b.im); }
  friend Complex operator*(const Real& a, Complex b) { return b *= a; }
  friend Complex operator*(Complex a, long b) { return a *= b; }
  friend Complex operator*(long a, Complex b) { return b *= a; }
  friend Complex operator/(Complex a, long b) { return a /= b; }
  friend Complex operator+(Complex a, long b) { a.re += b; return a; }
  friend Complex operator+(long a, Complex b) { b.re += a; return b; }
  friend Complex operator-(Complex a, long b) { a.re -= b; return a; }
  friend Complex operator-(long a, const Complex& b) { return Complex(a - b.re, -b.im); }

  friend bool operator==(const Complex& a, const Complex& b) noexcept { return a.re == b.re && a.im == b.im; }
};

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Complex sqr(const Complex& z) { return z * z; }

/// Argument in (-pi, pi]; a zero imaginary part of either sign counts as +0.
inline Real arg(const Complex& z) {
  if (z.im.is_zero()) return atan2(abs(z.im), z.re);
  return atan2(z.im, z.re);
}

/// Principal logarithm: Im in (-pi, pi].
inline Complex clog(const Complex& z) {
  if (!z.is_finite()) throw domain_error("clog: non-finite argument");
  if (z.is_zero()) throw domain_error("clog: logarithm of zero");
  return Complex(log(abs(z)), arg(z));
}

inline Complex cexp(const Complex& z) {
  const Real m = exp(z.re);
  return Complex(m * cos(z.im), m * sin(z.im));
}

inline Complex times_i(const Complex& z) { return Complex(-z.im, z.re); }

inline Complex require_finite(Complex z, const char* where) {
  if (!z.is_finite()) throw domain_error(std::string(where) + ": non-finite result");
  return z;
}

}  // namespace harmsum
