#pragma once

// S = sum_{n>=1} H_n / ((2n+1) C(2n,n)) with a rigorous truncation bound.
//
// Terms are produced by exact rational recurrence:
//   H_{n+1} = H_n + 1/(n+1)
//   b_{n+1} = b_n (n+1) / (2(2n+3)),   b_n = 1/((2n+1) C(2n,n))
// so the term ratio is
//   r(n) = term(n+1)/term(n) = (1 + 1/((n+1) H_n)) (n+1)/(2(2n+3)).
// r(n) < 1/4  <=>  (n+1) + 1/H_n < n + 3/2  <=>  H_n > 2  <=>  n >= 4,
// and r(1) = 0.3 > r(2) > r(3) > 1/4. Hence every ratio from index N+1 on is
// at most rho(N) = 1/4 for N >= 3 and rho(N) = r(N+1) for N < 3, and the
// remainder after N terms is at most term(N+1) / (1 - rho(N)).

#include <optional>
#include <vector>

#include "harmsum/check.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/rational.hpp"
#include "harmsum/real.hpp"
#include "harmsum/special/combinatorics.hpp"

namespace harmsum {

struct SeriesResult {
  Real value;
  Real tail_bound;
  long terms_used = 0;
  std::vector<Real> partials;  // filled only when requested
};

/// H_n / ((2n+1) C(2n,n)), exactly. Throws domain_error for n = 0.
inline ExactRational series_term(unsigned long n) {
  if (n == 0) throw domain_error("series_term: n must be >= 1");
  return harmonic(n) / ExactRational(BigInt(2 * n + 1) * central_binomial(n));
}

/// Exact ratio term(n+1)/term(n).
inline ExactRational series_term_ratio(unsigned long n) {
  if (n == 0) throw domain_error("series_term_ratio: n must be >= 1");
  const ExactRational h = harmonic(n);
  const ExactRational h_next = h + ExactRational(1L) / ExactRational(static_cast<long>(n + 1));
  return h_next / h * ExactRational(BigInt(n + 1), BigInt(2 * (2 * n + 3)));
}

/// Upper bound on term(n+1)/term(n) valid for every n >= N+1.
inline ExactRational series_ratio_bound(unsigned long N) {
  if (N == 0) throw domain_error("series_ratio_bound: N must be >= 1");
  if (N >= 3) return ExactRational(BigInt(1), BigInt(4));
  return series_term_ratio(N + 1);
}

/// Bound on the remainder after N terms: term(N+1) / (1 - series_ratio_bound(N)).
inline ExactRational series_tail_bound(unsigned long N) {
  return series_term(N + 1) / (ExactRational(1L) - series_ratio_bound(N));
}

namespace detail {

// Exact state of the term recurrence at index n.
struct TermRecurrence {
  unsigned long n = 1;
  ExactRational harmonic{1L};
  ExactRational weight{ExactRational(BigInt(1), BigInt(6))};  // 1/((2n+1) C(2n,n))

  ExactRational term() const { return harmonic * weight; }
  void advance() {
    weight *= ExactRational(BigInt(n + 1), BigInt(2 * (2 * n + 3)));
    ++n;
    harmonic += ExactRational(BigInt(1), BigInt(n));
  }
};

}  // namespace detail

/// Sums terms until the tail bound drops to `tol`. Throws convergence_error if
/// `max_terms` are used first.
inline SeriesResult sum_series(const Real& tol, long max_terms, const PrecisionConfig& precision,
                               bool keep_partials = false) {
  if (!(tol > 0)) throw std::invalid_argument("sum_series: tol must be positive");
  if (max_terms < 2) throw std::invalid_argument("sum_series: max_terms must be >= 2");
  const bits_t bits = precision.bits();
  const bits_t p = bits + kGuardBits;

  SeriesResult out{Real(p), Real(bits), 0, {}};
  detail::TermRecurrence rec;
  for (long N = 1; N <= max_terms; ++N) {
    out.value += rec.term().to_real(p);
    if (keep_partials) out.partials.push_back(out.value.with_bits(bits));
    rec.advance();
    const ExactRational rho = series_ratio_bound(static_cast<unsigned long>(N));
    const ExactRational tail = rec.term() / (ExactRational(1L) - rho);
    Real bound = tail.to_real(bits);
    mpfr_nextabove(bound.get());  // stays an upper bound after rounding
    if (bound <= tol) {
      out.terms_used = N;
      out.tail_bound = std::move(bound);
      out.value = out.value.with_bits(bits);
      return out;
    }
  }
  throw convergence_error("sum_series: tail bound did not reach " + tol.to_string(6) + " within " +
                          std::to_string(max_terms) + " terms");
}

/// 10^-(digits - 10).
inline Real default_series_tol(const PrecisionConfig& precision) { return precision.tolerance(10); }

inline SeriesResult sum_series(const PrecisionConfig& precision, long max_terms = 10000) {
  return sum_series(default_series_tol(precision), max_terms, precision);
}

/// sum n w^n = w/(1-w)^2 for |w| < 1.
inline Real power_sum_limit(const Real& w) { return w / sqr(1 - w); }

/// Exact remainder sum_{n>N} n w^n = w^(N+1) ((N+1) - N w) / (1-w)^2.
inline Real power_sum_remainder(const Real& w, long N) {
  return pow(w, N + 1) * ((N + 1) - N * w) / sqr(1 - w);
}

/// Compares the truncated sum_{n=1}^N n w^n with w/(1-w)^2 minus its exact
/// remainder. Slack covers forward rounding: w^n picks up ~n ulps, so the sum
/// is off by at most ~eps (N S + sum n^2 w^n) with sum n^2 w^n = w(1+w)/(1-w)^3.
inline CheckOutcome power_sum_check(const Real& w, long N) {
  if (!(w > 0 && w < 1)) throw domain_error("power_sum_check: w must lie in (0, 1)");
  if (N < 1) throw std::invalid_argument("power_sum_check: N must be >= 1");
  const bits_t bits = w.bits();
  Real power(1L, bits), sum(bits);
  for (long n = 1; n <= N; ++n) {
    power *= w;
    sum += n * power;
  }
  const Real limit = power_sum_limit(w);
  Real rhs = limit - power_sum_remainder(w, N);
  const Real eps = Real::pow2(1 - static_cast<long>(bits), bits);
  Real slack = 4 * eps * (N * limit + w * (1 + w) / pow(1 - w, 3));
  return CheckOutcome::compare("power_sum[w=" + w.to_string(6) + ",N=" + std::to_string(N) + "]", std::move(sum),
                               std::move(rhs), std::move(slack), "limit w/(1-w)^2 = " + limit.to_string(20));
}

}  // namespace harmsum
