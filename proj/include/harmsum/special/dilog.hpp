#pragma once

// Complex dilogarithm Li2(z) = sum_{n>=1} z^n / n^2 and its analytic
// continuation with the principal cut along [1, inf).
//
// Reduction chain, every log principal:
//   |z| > 1               Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
//   |z| <= 1, Re z > 1/2  Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
//   |z| <= 1/2            direct power series
//   otherwise             Li2(z) = sum_n B_n u^(n+1)/(n+1)!, u = -log(1-z)
// The last case covers 1/2 < |z| <= 1, Re z <= 1/2, where |u| <= pi/3, so
// the Bernoulli series converges like 6^-n. Points such as e^{i pi/3} are
// fixed by both functional equations and cannot be pushed into |z| <= 1/2.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "harmsum/complex.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/real.hpp"
#include "harmsum/special/combinatorics.hpp"

namespace harmsum {

namespace detail {

// c_k = B_{2k} / (2k+1)!, k = 1..K, per precision.
class Li2BernoulliCoefficients {
 public:
  static std::shared_ptr<const std::vector<Real>> at(bits_t bits) {
    static Li2BernoulliCoefficients cache;
    std::lock_guard lock(cache.mu_);
    auto& slot = cache.by_bits_[bits];
    if (!slot) {
      const std::size_t count = static_cast<std::size_t>(static_cast<double>(bits) / (2 * 2.584962500721156)) + 6;
      auto coeffs = std::make_shared<std::vector<Real>>();
      coeffs->reserve(count);
      const auto table = BernoulliTable::upto(2 * count);
      for (std::size_t k = 1; k <= count; ++k) {
        coeffs->push_back(((*table)[2 * k] / ExactRational(factorial(2 * k + 1))).to_real(bits));
      }
      slot = std::move(coeffs);
    }
    return slot;
  }

 private:
  std::mutex mu_;
  std::map<bits_t, std::shared_ptr<const std::vector<Real>>> by_bits_;
};

inline Real pi_squared_over_6(bits_t bits) { return sqr(Real::pi(bits)) / 6; }

inline Complex li2_direct_series(const Complex& z) {
  const bits_t p = z.bits();
  const Real r = abs(z);
  const Real tiny = Real::pow2(-static_cast<long>(p) - 4, p);
  Complex power = z, sum = z;
  Real rn = r;
  for (long n = 2;; ++n) {
    power *= z;
    rn *= r;
    sum += power / (n * n);
    // remainder <= r^(n+1) / ((n+1)^2 (1 - r)) <= 2 r^(n+1) / (n+1)^2 for r <= 1/2
    if (2 * rn * r / ((n + 1) * (n + 1)) <= tiny * max(abs(sum), Real(1L, p))) break;
  }
  return sum;
}

inline Complex li2_bernoulli_series(const Complex& z) {
  const bits_t p = z.bits();
  const Complex u = -clog(1 - z);
  const auto coeffs = Li2BernoulliCoefficients::at(p);
  const Complex u2 = sqr(u);
  Complex sum = u - u2 / 4;
  Complex power = u;
  const Real tiny = Real::pow2(-static_cast<long>(p) - 4, p);
  for (const Real& c : *coeffs) {
    power *= u2;
    const Complex term = power * c;
    sum += term;
    if (abs(term) <= tiny * abs(sum)) break;
  }
  return sum;
}

// |z| <= 1, Re z <= 1/2
inline Complex li2_left_disk(const Complex& z) {
  const bits_t p = z.bits();
  if (abs(z) <= Real(0.5, p)) return li2_direct_series(z);
  return li2_bernoulli_series(z);
}

// |z| <= 1
inline Complex li2_unit_disk(const Complex& z) {
  const bits_t p = z.bits();
  if (z.re > Real(0.5, p)) {
    const Complex w = 1 - z;
    if (w.is_zero()) return Complex(pi_squared_over_6(p));
    return pi_squared_over_6(p) - clog(z) * clog(w) - li2_left_disk(w);
  }
  return li2_left_disk(z);
}

inline Complex li2_raw(const Complex& z) {
  const bits_t p = z.bits();
  if (z.is_zero()) return Complex(p);
  if (abs(z) > Real(1L, p)) {
    const Complex l = clog(-z);
    return -pi_squared_over_6(p) - sqr(l) / 2 - li2_unit_disk(Complex(Real(1L, p)) / z);
  }
  return li2_unit_disk(z);
}

}  // namespace detail

/// Li2(z) with the principal branch; works for any finite z.
inline Complex li2(const Complex& z) {
  if (!z.is_finite()) throw domain_error("li2: non-finite argument");
  const Complex w = detail::li2_raw(z.with_bits(z.bits() + kGuardBits));
  return require_finite(w.with_bits(z.bits()), "li2");
}

/// dilog(x) = Li2(1 - x).
inline Complex dilog(const Complex& x) {
  if (!x.is_finite()) throw domain_error("dilog: non-finite argument");
  const bits_t p = x.bits() + kGuardBits;
  const Complex w = detail::li2_raw(1 - x.with_bits(p));
  return require_finite(w.with_bits(x.bits()), "dilog");
}

/// The pair of conjugate dilog arguments (sqrt3 -+ i) / (2 sqrt3).
struct Delta1Arguments {
  Complex minus;  // (sqrt3 - i) / (2 sqrt3)
  Complex plus;   // (sqrt3 + i) / (2 sqrt3)

  static Delta1Arguments at(bits_t bits) {
    const Real s3 = sqrt(Real(3L, bits));
    return {Complex(s3, Real(-1L, bits)) / (2 * s3), Complex(s3, Real(1L, bits)) / (2 * s3)};
  }
};

/// i [dilog(a-) - dilog(a+)] in complex arithmetic, before taking the real part.
struct Delta1Expression {
  Complex bracket;  // dilog(a-) - dilog(a+)
  Complex value;    // i * bracket
};

inline Delta1Expression delta1_expression(const PrecisionConfig& precision) {
  const auto args = Delta1Arguments::at(precision.bits());
  Complex bracket = dilog(args.minus) - dilog(args.plus);
  Complex value = times_i(bracket);
  return {std::move(bracket), std::move(value)};
}

/// delta_1 = i [dilog((sqrt3 - i)/(2 sqrt3)) - dilog((sqrt3 + i)/(2 sqrt3))], real by
/// conjugate symmetry. Throws consistency_error if |Im| > 10^-(digits - 5).
inline Real delta1(const PrecisionConfig& precision) {
  auto e = delta1_expression(precision);
  const Real bound = precision.tolerance(5);
  if (abs(e.value.im) > bound) {
    throw consistency_error("delta1: imaginary part " + e.value.im.to_string(10) + " exceeds " +
                            bound.to_string(3));
  }
  return std::move(e.value.re);
}

}  // namespace harmsum
