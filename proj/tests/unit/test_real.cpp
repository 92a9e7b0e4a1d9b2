#include <gtest/gtest.h>

#include <stdexcept>

#include "harmsum/complex.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/real.hpp"

using namespace harmsum;

TEST(PrecisionConfig, DigitsToBits) {
  EXPECT_EQ(PrecisionConfig(16).bits(), 54);
  EXPECT_EQ(PrecisionConfig(50).bits(), 167);
  EXPECT_EQ(PrecisionConfig().decimal_digits(), 50);
}

TEST(PrecisionConfig, RejectsOutOfRange) {
  EXPECT_THROW(PrecisionConfig(15), std::invalid_argument);
  EXPECT_THROW(PrecisionConfig(1001), std::invalid_argument);
  EXPECT_NO_THROW(PrecisionConfig(1000));
}

TEST(PrecisionConfig, Tolerance) {
  const PrecisionConfig pc(50);
  EXPECT_EQ(pc.tolerance(15), pc.parse("1e-35"));
  EXPECT_EQ(pc.epsilon(), Real::pow2(-166, pc.bits()));
}

TEST(Real, ParseRoundTrip) {
  const PrecisionConfig pc(50);
  const Real x = pc.parse("0.23416331197556167758569634383946743562837270748363");
  EXPECT_EQ(x.to_string(50), "0.23416331197556167758569634383946743562837270748363");
  EXPECT_EQ(pc.parse("-2.5e3").to_string(10), "-2500");
}

TEST(Real, ParseRejectsGarbage) {
  EXPECT_THROW(Real::parse("", 64), std::invalid_argument);
  EXPECT_THROW(Real::parse("abc", 64), std::invalid_argument);
  EXPECT_THROW(Real::parse("1.5x", 64), std::invalid_argument);
}

TEST(Real, MixedPrecisionUsesWider) {
  const Real a(1L, 64), b(3L, 200);
  EXPECT_EQ((a / b).bits(), 200);
  EXPECT_EQ((b - a).bits(), 200);
  EXPECT_EQ((2L - a).bits(), 64);
}

TEST(Real, Ordering) {
  const Real a(1.5, 64), b(2L, 64);
  EXPECT_LT(a, b);
  EXPECT_GT(b, 1L);
  EXPECT_TRUE(a == Real(3L, 64) / 2);
  Real nan(64);
  mpfr_set_nan(nan.get());
  EXPECT_FALSE(nan == nan);
  EXPECT_FALSE(nan < a);
  EXPECT_FALSE(nan.is_finite());
}

TEST(Real, ElementaryFunctions) {
  const PrecisionConfig pc(50);
  const Real one = pc.real(1);
  EXPECT_EQ(exp(log(one)), one);
  EXPECT_LE(abs(sqr(sqrt(pc.real(2))) - 2), pc.epsilon() * 4);
  EXPECT_LE(abs(4 * atan(one) - Real::pi(pc.bits())), pc.epsilon() * 4);
  EXPECT_EQ(ldexp(one, -3), pc.parse("0.125"));
  EXPECT_EQ(pow(pc.real(3), 4L), pc.real(81));
}

TEST(Complex, Arithmetic) {
  const bits_t b = 128;
  const Complex z(Real(3L, b), Real(4L, b));
  EXPECT_EQ(abs(z), Real(5L, b));
  const Complex w = z * conj(z);
  EXPECT_EQ(w.re, Real(25L, b));
  EXPECT_TRUE(w.im.is_zero());
  const Complex q = z / z;
  EXPECT_EQ(q.re, Real(1L, b));
  EXPECT_TRUE(q.im.is_zero());
  EXPECT_EQ(times_i(z), Complex(Real(-4L, b), Real(3L, b)));
}

TEST(Complex, PrincipalLog) {
  const PrecisionConfig pc(50);
  const bits_t b = pc.bits();
  const Real pi = Real::pi(b);
  // log(-1) = i pi, with either sign of zero imaginary part
  const Complex l1 = clog(Complex(Real(-1L, b), Real(0L, b)));
  EXPECT_TRUE(l1.re.is_zero());
  EXPECT_EQ(l1.im, pi);
  const Complex l2 = clog(Complex(Real(-1L, b), -Real(0L, b)));
  EXPECT_EQ(l2.im, pi);
  // log(i) = i pi/2
  const Complex l3 = clog(Complex::i(b));
  EXPECT_TRUE(l3.re.is_zero());
  EXPECT_EQ(l3.im, pi / 2);
  // just below the cut the argument approaches -pi
  const Complex l4 = clog(Complex(Real(-1L, b), pc.parse("-1e-40")));
  EXPECT_LT(l4.im, -pi + pc.parse("1e-39"));
}

TEST(Complex, LogDomainErrors) {
  const bits_t b = 64;
  EXPECT_THROW(clog(Complex(b)), domain_error);
  Real inf(b);
  mpfr_set_inf(inf.get(), 1);
  EXPECT_THROW(clog(Complex(inf, Real(0L, b))), domain_error);
}

TEST(Complex, ExpLogInverse) {
  const PrecisionConfig pc(50);
  const Complex z(pc.parse("0.3"), pc.parse("-2.1"));
  const Complex back = clog(cexp(z));
  EXPECT_LE(abs(back - z), pc.epsilon() * 8);
}
