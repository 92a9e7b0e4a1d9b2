#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "harmsum/errors.hpp"
#include "harmsum/real.hpp"

namespace harmsum {

using BigInt = mpz_class;

/// Reduced fraction numerator/denominator with denominator > 0.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExactRational(const BigInt& value) : q_(value) {}
  ExactRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw domain_error("ExactRational: zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  /// Correctly rounded conversion.
  Real to_real(bits_t bits) const {
    Real r(bits);
    mpfr_set_q(r.get(), q_.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  std::string to_string() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.q_ == 0) throw domain_error("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const { ExactRational r; r.q_ = -q_; return r; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

inline Real to_real(const BigInt& n, bits_t bits) {
  Real r(bits);
  mpfr_set_z(r.get(), n.get_mpz_t(), MPFR_RNDN);
  return r;
}

}  // namespace harmsum
