#pragma once

// Log-gamma, Gamma, Beta and digamma for positive real arguments.
//
// Both log_gamma and digamma shift the argument upward with the recurrences
//   lgamma(x) = lgamma(x + m) - log(x (x+1) ... (x+m-1))
//   psi(x)    = psi(x + m) - sum_{k<m} 1/(x+k)
// until it reaches X = bits/2 + 10, then apply the asymptotic series in 1/X.
// For real x > 0 the remainder is bounded by the first omitted term,
//   psi:    |B_{2K+2}| / ((2K+2) X^{2K+2})
//   lgamma: |B_{2K+2}| / ((2K+2)(2K+1) X^{2K+1})
// and the order K is the smallest one that pushes this below 2^-bits.
// The shift sum costs X roundings, absorbed by the guard bits.

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/real.hpp"

namespace harmsum {

namespace detail {

inline long asymptotic_shift(bits_t bits) { return static_cast<long>(bits / 2) + 10; }

// log2 |B_{2k}| from B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}; zeta(2k) <= 2.
inline double log2_abs_bernoulli(int k) {
  return 2.0 + std::lgamma(2.0 * k + 1.0) / std::log(2.0) - 2.0 * k * std::log2(2.0 * std::acos(-1.0));
}

// Smallest order K whose first omitted term is below 2^-bits at X.
inline int asymptotic_order(bits_t bits, long x, bool log_gamma) {
  const double log2x = std::log2(static_cast<double>(x));
  for (int k = 1;; ++k) {
    const int m = 2 * k + 2;
    double t = log2_abs_bernoulli(k + 1) - std::log2(static_cast<double>(m));
    t -= log_gamma ? std::log2(m - 1.0) + (m - 1) * log2x : m * log2x;
    if (t < -static_cast<double>(bits) - 4.0) return k;
  }
}

// B_2, B_4, ..., B_{2K} as reals, cached per precision.
class EvenBernoulliCache {
 public:
  static std::shared_ptr<const std::vector<Real>> get(bits_t bits, int count) {
    static EvenBernoulliCache cache;
    std::lock_guard lock(cache.mu_);
    auto& slot = cache.values_[bits];
    if (!slot || static_cast<int>(slot->size()) < count) slot = compute(bits, count);
    return slot;
  }

 private:
  static std::shared_ptr<const std::vector<Real>> compute(bits_t bits, int count) {
    auto out = std::make_shared<std::vector<Real>>();
    const bits_t p = bits + 16;
    const Real two_pi = 2 * Real::pi(p);
    for (int k = 1; k <= count; ++k) {
      Real z(p), f(p);
      mpfr_zeta_ui(z.get(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
      mpfr_fac_ui(f.get(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
      Real b = 2 * f * z / pow(two_pi, static_cast<long>(2 * k));
      if (k % 2 == 0) b = -b;
      out->push_back(b.with_bits(bits));
    }
    return out;
  }

  std::mutex mu_;
  std::map<bits_t, std::shared_ptr<const std::vector<Real>>> values_;
};

inline void require_positive(const Real& x, const char* where) {
  if (!x.is_finite()) throw domain_error(std::string(where) + ": non-finite argument");
  if (x.sign() <= 0) throw domain_error(std::string(where) + ": argument must be positive, got " + x.to_string(20));
}

// lgamma at the argument's own precision (callers add guard bits).
inline Real log_gamma_raw(const Real& x) {
  const bits_t p = x.bits();
  const long target = asymptotic_shift(p);
  const int order = asymptotic_order(p, target, true);
  const auto b = EvenBernoulliCache::get(p, order);
  Real y = x;
  Real prod(1L, p);
  bool shifted = false;
  while (y < target) {
    prod *= y;
    y += 1;
    shifted = true;
  }
  const Real inv = 1 / y;
  const Real inv2 = sqr(inv);
  Real power = inv, corr(p);
  for (int k = 1; k <= order; ++k) {
    corr += (*b)[k - 1] * power / (2L * k * (2L * k - 1));
    power *= inv2;
  }
  Real result = (y - Real(0.5, p)) * log(y) - y + log(2 * Real::pi(p)) / 2 + corr;
  if (shifted) result -= log(prod);
  return result;
}

}  // namespace detail

/// log Gamma(x), x > 0.
inline Real log_gamma(const Real& x) {
  detail::require_positive(x, "log_gamma");
  return detail::log_gamma_raw(x.with_bits(x.bits() + kGuardBits)).with_bits(x.bits());
}

/// Gamma(x), x > 0.
inline Real gamma(const Real& x) {
  detail::require_positive(x, "gamma");
  return exp(detail::log_gamma_raw(x.with_bits(x.bits() + kGuardBits))).with_bits(x.bits());
}

/// B(u, v) = Gamma(u) Gamma(v) / Gamma(u + v), u, v > 0.
inline Real beta(const Real& u, const Real& v) {
  detail::require_positive(u, "beta");
  detail::require_positive(v, "beta");
  const bits_t bits = std::max(u.bits(), v.bits());
  const bits_t p = bits + kGuardBits;
  const Real uu = u.with_bits(p), vv = v.with_bits(p);
  const Real l = detail::log_gamma_raw(uu) + detail::log_gamma_raw(vv) - detail::log_gamma_raw(uu + vv);
  return exp(l).with_bits(bits);
}

/// psi(x) = Gamma'(x)/Gamma(x), x > 0.
inline Real digamma(const Real& x) {
  detail::require_positive(x, "digamma");
  const bits_t p = x.bits() + kGuardBits;
  const long target = detail::asymptotic_shift(p);
  const int order = detail::asymptotic_order(p, target, false);
  const auto b = detail::EvenBernoulliCache::get(p, order);
  Real y = x.with_bits(p);
  Real shift_sum(p);
  while (y < target) {
    shift_sum += 1 / y;
    y += 1;
  }
  const Real inv2 = 1 / sqr(y);
  Real power = inv2, corr(p);
  for (int k = 1; k <= order; ++k) {
    corr += (*b)[k - 1] * power / (2L * k);
    power *= inv2;
  }
  const Real result = log(y) - 1 / (2 * y) - corr - shift_sum;
  return result.with_bits(x.bits());
}

}  // namespace harmsum
