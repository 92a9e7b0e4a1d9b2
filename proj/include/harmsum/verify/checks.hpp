#pragma once

// One check per step of the reduction
//   S = sum H_n/((2n+1) C(2n,n))
//     = -int_0^1 int_0^1 v(1-v) log u / [1 - (1-u) v(1-v)]^2 du dv
//     = -int_0^1 log[1 - v(1-v)] / (1 - v(1-v)) dv
//     = -(pi/(3 sqrt3)) log 3 - (2/sqrt3) delta_1
// together with the Beta and digamma integrals the reduction rests on.

#include <string>
#include <utility>
#include <vector>

#include "harmsum/check.hpp"
#include "harmsum/constants.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/rational.hpp"
#include "harmsum/real.hpp"
#include "harmsum/series.hpp"
#include "harmsum/special/combinatorics.hpp"
#include "harmsum/special/dilog.hpp"
#include "harmsum/special/gamma.hpp"

namespace harmsum {

/// Per-check tolerances.
struct ToleranceSchedule {
  Real standard;         // 10^-(digits-15)
  Real double_integral;  // 10^-min(12, digits-15)
  Real antiderivative;   // 10^-(digits/3 - 2), finite-difference limited

  static ToleranceSchedule defaults(const PrecisionConfig& precision) {
    const int d = precision.decimal_digits();
    const bits_t bits = precision.bits();
    return {precision.tolerance(15), Real::pow10(-std::min(12, d - 15), bits),
            Real::pow10(-(d / 3 - 2), bits)};
  }

  static ToleranceSchedule uniform(const Real& tol) { return {tol, tol, tol}; }
};

namespace detail {

inline std::string label(const char* base, const std::string& arg) { return std::string(base) + "[" + arg + "]"; }

/// Quadrature target for a comparison at `tol`; never below what the precision can resolve.
inline Real quadrature_tol(const Real& tol, const PrecisionConfig& precision) {
  return max(tol / 10, precision.tolerance(5));
}

inline std::string quad_detail(const QuadratureResult& q) {
  return "quadrature: error_estimate=" + q.error_estimate.to_string(3) + " evaluations=" +
         std::to_string(q.evaluations) + " levels=" + std::to_string(q.levels) +
         (q.converged ? "" : " NOT CONVERGED");
}

inline Real rational_abs_diff(const ExactRational& a, const ExactRational& b, bits_t bits) {
  return abs((a - b).to_real(bits));
}

}  // namespace detail

/// S at the default series tolerance.
/// S summed until the tail bound is below one ulp of the working precision.
inline Real series_value(const PrecisionConfig& precision, long max_terms = 10000) {
  return sum_series(precision.epsilon(), max_terms, precision).value;
}

/// (n!)^2/(2n+1)! = 1/((2n+1) C(2n,n)) = int_0^1 (1-v)^n v^n dv.
/// Returns the exact rational comparison (tol 0) and the quadrature comparison.
inline std::vector<CheckOutcome> check_eq1(unsigned long n, const Real& tol, const PrecisionConfig& precision) {
  if (n < 1 || n > 50) throw std::invalid_argument("check_eq1: n must be in [1, 50]");
  const bits_t bits = precision.bits();
  const std::string arg = "n=" + std::to_string(n);

  const BigInt fn = factorial(n);
  const ExactRational gamma_ratio(fn * fn, factorial(2 * n + 1));
  const ExactRational binomial_form(BigInt(1), BigInt(2 * n + 1) * central_binomial(n));
  CheckOutcome exact{detail::label("eq1.exact", arg),
                     gamma_ratio.to_real(bits),
                     binomial_form.to_real(bits),
                     detail::rational_abs_diff(gamma_ratio, binomial_form, bits),
                     Real(bits),
                     gamma_ratio == binomial_form,
                     "Gamma(n+1)^2/Gamma(2n+2) = " + gamma_ratio.to_string() +
                         ", 1/((2n+1)C(2n,n)) = " + binomial_form.to_string(),
                     0.0};

  const auto q = integrate([n](const Real& v, const Real& vc) { return pow(v * vc, static_cast<long>(n)); },
                           detail::quadrature_tol(tol, precision), precision);
  auto numeric = CheckOutcome::compare(detail::label("eq1.quadrature", arg), q.value, binomial_form.to_real(bits),
                                       tol, detail::quad_detail(q));
  return {std::move(exact), std::move(numeric)};
}

/// H_n = gamma + psi(n+1) = -n int_0^1 t^(n-1) log(1-t) dt, pairwise.
inline std::vector<CheckOutcome> check_eq2(unsigned long n, const Real& tol, const PrecisionConfig& precision) {
  if (n < 1) throw std::invalid_argument("check_eq2: n must be >= 1");
  const bits_t bits = precision.bits();
  const std::string arg = "n=" + std::to_string(n);
  const Constants k = Constants::at(precision);

  const Real exact = harmonic(n).to_real(bits);
  const Real via_digamma = k.gamma + digamma(Real(static_cast<long>(n) + 1, bits));
  const auto q = integrate(
      [n](const Real& t, const Real& tc) { return pow(t, static_cast<long>(n) - 1) * log(tc); },
      detail::quadrature_tol(tol, precision), precision);
  const Real via_integral = -(static_cast<long>(n) * q.value);

  std::vector<CheckOutcome> out;
  out.push_back(CheckOutcome::compare(detail::label("eq2.digamma", arg), via_digamma, exact, tol,
                                      "gamma + psi(n+1) vs H_n = " + harmonic(n).to_string()));
  out.push_back(CheckOutcome::compare(detail::label("eq2.integral", arg), via_integral, exact, tol,
                                      "-n int t^(n-1) log(1-t) vs H_n; " + detail::quad_detail(q)));
  out.push_back(CheckOutcome::compare(detail::label("eq2.digamma_vs_integral", arg), via_digamma, via_integral, tol,
                                      "gamma + psi(n+1) vs -n int t^(n-1) log(1-t)"));
  return out;
}

/// psi(u+1) + gamma = -u int_0^1 t^(u-1) log(1-t) dt for real u > 0.
inline CheckOutcome check_digamma_integral(const Real& u, const Real& tol, const PrecisionConfig& precision) {
  if (!(u > 0)) throw domain_error("check_digamma_integral: u must be positive");
  const Real x = u.with_bits(precision.bits());
  const Constants k = Constants::at(precision);
  const Real lhs = digamma(x + 1) + k.gamma;
  const Real exponent = x - 1;
  const auto q = integrate([&](const Real& t, const Real& tc) { return pow(t, exponent) * log(tc); },
                           detail::quadrature_tol(tol, precision), precision);
  return CheckOutcome::compare(detail::label("eq2.half_integer", "u=" + x.to_string(8)), lhs, -(x * q.value), tol,
                               "psi(u+1) + gamma vs -u int t^(u-1) log(1-t); " + detail::quad_detail(q));
}

/// int_0^1 log u / [1 - a(1-u)]^2 du = log(1-a)/(a(1-a)), by quadrature and by
/// the antiderivative G(u) = -([1-a(1-u)] log[1-a(1-u)] - a u log u) / (a(1-a)[1-a(1-u)]).
inline std::vector<CheckOutcome> check_inner_integral(const Real& a, const Real& tol,
                                                      const PrecisionConfig& precision) {
  const bits_t bits = precision.bits();
  const Real margin = Real::pow10(-6, bits);
  if (!(a > margin && a < 1 - margin)) {
    throw domain_error("check_inner_integral: a must lie in (1e-6, 1 - 1e-6), got " + a.to_string(10));
  }
  const Real x = a.with_bits(bits);
  const std::string arg = "a=" + x.to_string(8);
  const Real closed = log(1 - x) / (x * (1 - x));

  const auto q = integrate(
      [&](const Real& u, const Real& uc) {
        const Real d = 1 - x * uc;
        return log(u) / sqr(d);
      },
      detail::quadrature_tol(tol, precision), precision);

  const auto antiderivative = [&](const Real& u) {
    const Real d = 1 - x * (1 - u);
    const Real ulogu = u.is_zero() ? Real(bits) : u * log(u);
    return -(d * log(d) - x * ulogu) / (x * (1 - x) * d);
  };
  // u log u ~ 2^-(4 bits) * 4 bits ln 2 at the lower limit: far below resolution.
  const Real lower = Real::pow2(-4 * static_cast<long>(bits), bits);
  const Real newton_leibniz = antiderivative(Real(1L, bits)) - antiderivative(lower);

  std::vector<CheckOutcome> out;
  out.push_back(CheckOutcome::compare(detail::label("inner.quadrature", arg), q.value, closed, tol,
                                      detail::quad_detail(q)));
  out.push_back(CheckOutcome::compare(detail::label("inner.newton_leibniz", arg), newton_leibniz, closed, tol,
                                      "G(1) - G(0+) with G(0+) taken at u = 2^-" + std::to_string(4 * bits)));
  return out;
}

/// int_0^1 v(1-v) log u / [1 - (1-u) v(1-v)]^2 du = log[1 - v(1-v)] / (1 - v(1-v)).
inline CheckOutcome check_reduction(const Real& v, const Real& tol, const PrecisionConfig& precision) {
  const bits_t bits = precision.bits();
  if (!(v > 0 && v < 1)) throw domain_error("check_reduction: v must lie in (0, 1)");
  const Real x = v.with_bits(bits);
  const Real a = x * (1 - x);
  const Real closed = log(1 - a) / (1 - a);
  const auto q = integrate(
      [&](const Real& u, const Real& uc) {
        const Real d = 1 - uc * a;
        return a * log(u) / sqr(d);
      },
      detail::quadrature_tol(tol, precision), precision);
  return CheckOutcome::compare(detail::label("reduction", "v=" + x.to_string(8)), q.value, closed, tol,
                               detail::quad_detail(q));
}

inline Real double_integrand(const Real& u, const Real& v) {
  const Real a = v * (1 - v);
  return a * log(u) / sqr(1 - (1 - u) * a);
}

/// Quadrature floor for the 2D check: 1e-13 keeps the iterated rule cheap.
inline Real double_integral_quadrature_tol(const Real& tol, const PrecisionConfig& precision) {
  return max(tol / 10, Real::pow10(-13, precision.bits()));
}

/// S = -int int v(1-v) log u / [1 - (1-u) v(1-v)]^2 du dv.
inline CheckOutcome check_double_integral(const Real& tol, const PrecisionConfig& precision) {
  const auto q = integrate2d(double_integrand, double_integral_quadrature_tol(tol, precision), precision);
  return CheckOutcome::compare("double_integral", -q.value, series_value(precision), tol, detail::quad_detail(q));
}

/// S = -int_0^1 log[1 - v(1-v)] / (1 - v(1-v)) dv. The integrand is smooth since 1 - v(1-v) lies in [3/4, 1].
inline QuadratureResult integral3(const Real& tol, const PrecisionConfig& precision) {
  return integrate(
      [](const Real& v, const Real& vc) {
        const Real q = 1 - v * vc;
        return log(q) / q;
      },
      tol, precision);
}

inline CheckOutcome check_eq3(const Real& tol, const PrecisionConfig& precision) {
  const auto q = integral3(detail::quadrature_tol(tol, precision), precision);
  return CheckOutcome::compare("eq3", -q.value, series_value(precision), tol, detail::quad_detail(q));
}

/// Im(i [dilog(a-) - dilog(a+)]) = 0 within 10^-(digits-5).
inline CheckOutcome check_delta1_reality(const PrecisionConfig& precision) {
  const auto e = delta1_expression(precision);
  return CheckOutcome::compare("delta1.reality", e.value.im, Real(precision.bits()), precision.tolerance(5),
                               "delta1 = " + e.value.re.to_string(precision.decimal_digits()));
}

/// dilog((sqrt3 - i)/(2 sqrt3)) = Li2((sqrt3 + i)/(2 sqrt3)) since 1 - a- = a+.
inline CheckOutcome check_argument_swap(const PrecisionConfig& precision) {
  const auto args = Delta1Arguments::at(precision.bits());
  Complex lhs = dilog(args.minus);
  Complex rhs = li2(args.plus);
  Real tol = 8 * precision.epsilon() * abs(rhs);
  return CheckOutcome::compare("dilog.argument_swap", std::move(lhs), std::move(rhs), std::move(tol),
                               "1 - (sqrt3 - i)/(2 sqrt3) = (sqrt3 + i)/(2 sqrt3)");
}

/// S = -(pi/(3 sqrt3)) log 3 - (2/sqrt3) delta_1.
inline CheckOutcome check_closed_form(const Real& tol, const PrecisionConfig& precision) {
  const Constants k = Constants::at(precision);
  const Real d1 = delta1(precision);
  const Real log_part = k.pi * k.log3 / (3 * k.sqrt3);
  const Real dilog_part = 2 * d1 / k.sqrt3;
  const int digits = precision.decimal_digits();
  return CheckOutcome::compare("closed_form", series_value(precision), -log_part - dilog_part, tol,
                               "pi log3/(3 sqrt3) = " + log_part.to_string(digits) + "; (2/sqrt3) delta1 = " +
                                   dilog_part.to_string(digits) + "; delta1 = " + d1.to_string(digits));
}

}  // namespace harmsum
