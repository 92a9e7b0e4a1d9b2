#pragma once

// Closed-form antiderivative of log(1 - v(1-v)) / (1 - v(1-v)) as produced by
// a computer-algebra integrator, with w = (-1)^(1/3) and r = (-1)^(2/3):
//
//   6F(v) = -i sqrt3 log^2(v - w) + 3r/(1+w) log^2(v + r)
//           - 4 sqrt3 atan((2v-1)/sqrt3) [log(v - w) + log(v + r) - log(v^2 - v + 1)]
//           - 6r/(1+w) [log(v + r) log((1 + r v)/(1+w)) + Li2(-i (v + r)/sqrt3)]
//           + 6r/(1+w) [log(v - w) log(A) + Li2(B)]
//
// In the published form A = -r (1 + r v)/(1+w) and B = (v + r)/(1+w). That
// expression is not an antiderivative for any choice of cube roots: its
// derivative misses the integrand by O(1). Exchanging (1 + r v) and (v + r)
// between A and B gives the partial-fraction term
//   log(v - w) log((v - wbar)/(w - wbar)) + Li2((v - w)/(wbar - w))
// (with r = -wbar and w r = -1), which is an exact antiderivative under the
// principal roots. Both forms are kept so the discrepancy stays measurable.

#include <string>

#include "harmsum/check.hpp"
#include "harmsum/complex.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/real.hpp"
#include "harmsum/special/dilog.hpp"

namespace harmsum {

/// Values substituted for (-1)^(1/3) and (-1)^(2/3).
struct BranchChoice {
  std::string name;
  Complex root_one_third;
  Complex root_two_thirds;

  /// (-1)^(1/3) = e^{i pi/3}, (-1)^(2/3) = e^{2 i pi/3}.
  static BranchChoice principal(bits_t bits) {
    const Real pi = Real::pi(bits);
    return {"principal", Complex::polar_unit(pi / 3), Complex::polar_unit(2 * pi / 3)};
  }

  /// (-1)^(1/3) = e^{i pi/3} but (-1)^(2/3) = 1, the substitution used for the
  /// published boundary evaluations.
  static BranchChoice unit_two_thirds(bits_t bits) {
    const Real pi = Real::pi(bits);
    return {"unit_two_thirds", Complex::polar_unit(pi / 3), Complex(Real(1L, bits))};
  }

  /// Throws consistency_error unless root_one_third^3 = -1 and
  /// root_two_thirds^3 = 1 within `tol`; returns a note on whether
  /// root_two_thirds equals root_one_third^2.
  std::string validate(const Real& tol) const {
    const Complex c1 = root_one_third * root_one_third * root_one_third;
    const Complex c2 = root_two_thirds * root_two_thirds * root_two_thirds;
    if (abs(c1 + 1) > tol) throw consistency_error(name + ": root_one_third is not a cube root of -1");
    if (abs(c2 - 1) > tol) throw consistency_error(name + ": root_two_thirds is not a cube root of 1");
    const bool squared = abs(root_two_thirds - sqr(root_one_third)) <= tol;
    return squared ? "root_two_thirds = root_one_third^2" : "root_two_thirds != root_one_third^2";
  }
};

enum class AntiderivativeForm {
  published,        // as displayed, A = -r(1+rv)/(1+w), B = (v+r)/(1+w)
  swapped_arguments // A = -r(v+r)/(1+w), B = (1+rv)/(1+w)
};

inline const char* to_string(AntiderivativeForm f) {
  return f == AntiderivativeForm::published ? "published" : "swapped_arguments";
}

namespace detail {

inline Complex antiderivative_raw(const Real& v, const BranchChoice& branches, AntiderivativeForm form) {
  const bits_t p = v.bits();
  const Complex w = branches.root_one_third.with_bits(p);
  const Complex r = branches.root_two_thirds.with_bits(p);
  const Real s3 = sqrt(Real(3L, p));
  const Complex i = Complex::i(p);

  const Complex l1 = clog(Complex(v) - w);
  const Complex l2 = clog(Complex(v) + r);
  const Real q = log(sqr(v) - v + 1);
  const Complex c = r / (1 + w);
  const Complex one_plus_rv = 1 + r * v;
  const Complex v_plus_r = Complex(v) + r;

  Complex sum = -(i * s3) * sqr(l1);
  sum += 3 * c * sqr(l2);
  sum -= 4 * s3 * atan((2 * v - 1) / s3) * (l1 + l2 - q);
  sum -= 6 * c * (l2 * clog(one_plus_rv / (1 + w)) + li2(-(i * v_plus_r) / s3));
  if (form == AntiderivativeForm::published) {
    sum += 6 * c * (l1 * clog(-(r * one_plus_rv) / (1 + w)) + li2(v_plus_r / (1 + w)));
  } else {
    sum += 6 * c * (l1 * clog(-(r * v_plus_r) / (1 + w)) + li2(one_plus_rv / (1 + w)));
  }
  return sum / 6;
}

}  // namespace detail

/// F(v) for 0 <= v <= 1 (endpoints allowed for boundary evaluation), complex.
/// Evaluated with guard bits and rounded to the precision of `v`.
inline Complex wolfram_antiderivative_closed(const Real& v, const BranchChoice& branches,
                                             AntiderivativeForm form = AntiderivativeForm::published) {
  if (v < 0 || v > 1) throw domain_error("antiderivative: v must lie in [0, 1]");
  const bits_t p = v.bits() + kGuardBits;
  return require_finite(detail::antiderivative_raw(v.with_bits(p), branches, form).with_bits(v.bits()),
                        "antiderivative");
}

/// F(v) on the open interval (0, 1).
inline Complex wolfram_antiderivative(const Real& v, const BranchChoice& branches,
                                      AntiderivativeForm form = AntiderivativeForm::published) {
  if (!(v > 0 && v < 1)) throw domain_error("wolfram_antiderivative: v must lie in (0, 1)");
  return wolfram_antiderivative_closed(v, branches, form);
}

/// log(1 - v(1-v)) / (1 - v(1-v))
inline Real reduced_integrand(const Real& v) {
  const Real q = 1 - v * (1 - v);
  return log(q) / q;
}

/// Central difference with one Richardson step: (4 D(h/2) - D(h)) / 3.
template <class F>
Complex richardson_derivative(F&& f, const Real& v, const Real& h) {
  const auto central = [&](const Real& step) { return (f(v + step) - f(v - step)) / (2 * step); };
  const Real half = h / 2;
  return (4 * central(half) - central(h)) / 3;
}

/// Step tied to working precision: truncation O(h^4) balances roundoff eps/h at h ~ eps^(1/5).
inline Real derivative_step(const PrecisionConfig& precision) {
  return Real::pow10(-precision.decimal_digits() / 5, precision.bits());
}

/// F'(v) by finite differences against the integrand, at one grid point.
inline CheckOutcome check_antiderivative(const Real& v, const BranchChoice& branches, AntiderivativeForm form,
                                         const Real& tol, const PrecisionConfig& precision) {
  const Real x = v.with_bits(precision.bits());
  const auto f = [&](const Real& t) { return wolfram_antiderivative(t, branches, form); };
  Complex derivative = richardson_derivative(f, x, derivative_step(precision));
  return CheckOutcome::compare(std::string("antiderivative[") + to_string(form) + "," + branches.name +
                                   ",v=" + x.to_string(6) + "]",
                               std::move(derivative), reduced_integrand(x), tol,
                               "Richardson central difference, h = 1e-" +
                                   std::to_string(precision.decimal_digits() / 5) + "; " +
                                   branches.validate(precision.tolerance(5)));
}

/// F(1) - F(0) against the definite integral -S.
inline CheckOutcome check_antiderivative_boundary(const BranchChoice& branches, AntiderivativeForm form,
                                                  const Real& series_value, const Real& tol,
                                                  const PrecisionConfig& precision) {
  const bits_t bits = precision.bits();
  const Complex f1 = wolfram_antiderivative_closed(Real(1L, bits), branches, form);
  const Complex f0 = wolfram_antiderivative_closed(Real(0L, bits), branches, form);
  const int d = precision.decimal_digits();
  return CheckOutcome::compare(std::string("antiderivative_boundary[") + to_string(form) + "," + branches.name + "]",
                               f1 - f0, -series_value, tol,
                               "F(1) = " + f1.re.to_string(d) + " + " + f1.im.to_string(d) + "i; F(0) = " +
                                   f0.re.to_string(d) + " + " + f0.im.to_string(d) + "i");
}

}  // namespace harmsum
