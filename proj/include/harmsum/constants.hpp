#pragma once

#include <string>

#include "harmsum/errors.hpp"
#include "harmsum/real.hpp"

namespace harmsum {

namespace literals60 {
inline constexpr const char* kPi = "3.14159265358979323846264338327950288419716939937510582097494";
inline constexpr const char* kEulerGamma = "0.577215664901532860606512090082402431042159335939923598805767";
inline constexpr const char* kSqrt3 = "1.73205080756887729352744634150587236694280525381038062805581";
inline constexpr const char* kLog3 = "1.09861228866810969139524523692252570464749055782274945173469";
inline constexpr const char* kLog2 = "0.693147180559945309417232121458176568075500134360255254120680";
/// Literals above carry 60 significant digits; beyond this the computed values are used alone.
inline constexpr int kTrustedDigits = 58;
}  // namespace literals60

namespace detail {

// sum x^(2k+1)/(2k+1) for |x| < 1
inline Real atanh_series(const Real& x) {
  const Real x2 = sqr(x);
  const Real tiny = Real::pow2(-static_cast<long>(x.bits()) - 8, x.bits());
  Real power = x, sum = x;
  for (long k = 1;; ++k) {
    power *= x2;
    Real term = power / (2 * k + 1);
    sum += term;
    if (abs(term) < tiny) break;
  }
  return sum;
}

// sum (-1)^k x^(2k+1)/(2k+1)
inline Real atan_series(const Real& x) {
  const Real x2 = sqr(x);
  const Real tiny = Real::pow2(-static_cast<long>(x.bits()) - 8, x.bits());
  Real power = x, sum = x;
  for (long k = 1;; ++k) {
    power *= x2;
    Real term = power / (2 * k + 1);
    if (k % 2) sum -= term; else sum += term;
    if (abs(term) < tiny) break;
  }
  return sum;
}

inline bool within_ulps(const Real& a, const Real& b, long ulps, bits_t bits) {
  const Real scale = max(abs(a), abs(b));
  return abs(a - b) <= ldexp(scale, 1 - static_cast<long>(bits)) * ulps;
}

}  // namespace detail

/// pi by Machin's formula, independent of MPFR's own constant.
inline Real machin_pi(bits_t bits) {
  const bits_t w = bits + 16;
  const Real p = 16 * detail::atan_series(Real(1L, w) / 5) - 4 * detail::atan_series(Real(1L, w) / 239);
  return p.with_bits(bits);
}

/// Mathematical constants at a working precision, each cross-checked between
/// stored literals and an independent computation.
struct Constants {
  Real pi;
  Real gamma;
  Real sqrt3;
  Real log3;
  Real log2;

  static Constants at(const PrecisionConfig& precision) {
    const bits_t bits = precision.bits();
    const bits_t w = bits + 16;
    Real euler(w);
    mpfr_const_euler(euler.get(), MPFR_RNDN);
    const Real log2 = 2 * detail::atanh_series(Real(1L, w) / 3);
    const Real log3 = log2 + 2 * detail::atanh_series(Real(1L, w) / 5);
    Real root3(std::sqrt(3.0), w);
    for (int i = 0; i < 12; ++i) root3 = (root3 + Real(3L, w) / root3) / 2;

    Constants computed{machin_pi(bits), euler.with_bits(bits), root3.with_bits(bits), log3.with_bits(bits),
                       log2.with_bits(bits)};
    if (precision.decimal_digits() > literals60::kTrustedDigits) return computed;

    Constants stored{Real::parse(literals60::kPi, bits), Real::parse(literals60::kEulerGamma, bits),
                     Real::parse(literals60::kSqrt3, bits), Real::parse(literals60::kLog3, bits),
                     Real::parse(literals60::kLog2, bits)};
    const auto check = [&](const Real& a, const Real& b, const char* name) {
      if (!detail::within_ulps(a, b, 2, bits)) {
        throw consistency_error(std::string("constant ") + name + " literal disagrees with computation: " +
                                a.to_string(precision.decimal_digits()) + " vs " +
                                b.to_string(precision.decimal_digits()));
      }
    };
    check(stored.pi, computed.pi, "pi");
    check(stored.gamma, computed.gamma, "gamma");
    check(stored.sqrt3, computed.sqrt3, "sqrt3");
    check(stored.log3, computed.log3, "log3");
    check(stored.log2, computed.log2, "log2");
    return stored;
  }
};

}  // namespace harmsum
