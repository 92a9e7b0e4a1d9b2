#include <gtest/gtest.h>

#include "harmsum/constants.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/special/gamma.hpp"

using namespace harmsum;

namespace {

const PrecisionConfig kPc{50};

Real rel_err(const Real& got, const Real& want) { return abs(got - want) / max(abs(want), Real(1L, want.bits())); }

}  // namespace

// Reference values computed independently with mpmath at 70 digits.
TEST(LogGamma, ReferenceValues) {
  const Real tol = kPc.parse("1e-48");
  EXPECT_LE(rel_err(log_gamma(kPc.real(10)), kPc.parse("12.801827480081469611207717874566706164281149255663")), tol);
  EXPECT_LE(rel_err(log_gamma(kPc.parse("0.001")),
                    kPc.parse("6.907178885383853682512344668076982502159961617446109153")),
            tol);
  EXPECT_LE(rel_err(log_gamma(kPc.parse("0.5")),
                    kPc.parse("0.5723649429247000870717136756765293558236474064576557858")),
            tol);
  EXPECT_LE(rel_err(log_gamma(kPc.parse("3.75")),
                    kPc.parse("1.486815578593417055540581801444205025412948650163074939")),
            tol);
  EXPECT_LE(rel_err(log_gamma(kPc.parse("123.456")),
                    kPc.parse("469.6055471299294687300691923309300468877837658568773158")),
            tol);
}

TEST(Gamma, ReferenceValues) {
  const Real tol = kPc.parse("1e-48");
  EXPECT_LE(rel_err(gamma(kPc.parse("0.25")), kPc.parse("3.625609908221908311930685155867672002995167682880065467")),
            tol);
  EXPECT_LE(rel_err(gamma(kPc.parse("7.5")), kPc.parse("1871.254305797788346476077053603950424041772232446084254")),
            tol);
  EXPECT_LE(rel_err(gamma(kPc.real(6)), kPc.real(120)), tol);
}

TEST(Beta, ReferenceValues) {
  const Real tol = kPc.parse("1e-48");
  EXPECT_LE(rel_err(beta(kPc.real(4), kPc.real(4)), kPc.real(1) / 140), tol);
  EXPECT_LE(rel_err(beta(kPc.parse("2.5"), kPc.parse("1.5")),
                    kPc.parse("0.1963495408493620774039152114549689302623230874609441138")),
            tol);
  EXPECT_LE(rel_err(beta(kPc.parse("0.3"), kPc.parse("0.7")),
                    kPc.parse("3.883222077450933154693731259925391915269339787692096599")),
            tol);
}

TEST(Digamma, ReferenceValues) {
  const Real tol = kPc.parse("1e-48");
  EXPECT_LE(rel_err(digamma(kPc.parse("0.001")),
                    kPc.parse("-1000.575571931810300471472614469649228500126746905912225")),
            tol);
  EXPECT_LE(rel_err(digamma(kPc.parse("0.25")),
                    kPc.parse("-4.227453533376265408089530146096683577367244438708242272")),
            tol);
  EXPECT_LE(rel_err(digamma(kPc.parse("10.5")),
                    kPc.parse("2.303001034297686375272593550849766052226292632129263983")),
            tol);
  EXPECT_LE(rel_err(digamma(kPc.real(1000)),
                    kPc.parse("6.907255195648812052050006114251497745479519833768880067")),
            tol);
}

TEST(Digamma, SpecialValues) {
  const Constants c = Constants::at(kPc);
  const Real tol = kPc.parse("1e-48");
  EXPECT_LE(abs(digamma(kPc.real(1)) + c.gamma), tol);
  EXPECT_LE(abs(digamma(kPc.real(1) / 2) + c.gamma + 2 * c.log2), tol);
}

TEST(Digamma, Recurrence) {
  const Real tol = kPc.parse("1e-47");
  for (const char* s : {"0.5", "1.25", "3.75", "10.5"}) {
    const Real x = kPc.parse(s);
    EXPECT_LE(abs(digamma(x + 1) - digamma(x) - 1 / x), tol) << s;
  }
}

TEST(Digamma, DerivativeOfLogGamma) {
  const Real h = kPc.parse("1e-10");
  for (const char* s : {"0.7", "2.5", "40"}) {
    const Real x = kPc.parse(s);
    const Real fd = (log_gamma(x + h) - log_gamma(x - h)) / (2 * h);
    EXPECT_LE(abs(fd - digamma(x)), kPc.parse("1e-18")) << s;
  }
}

TEST(Gamma, AgreesWithMpfrAcrossPrecisions) {
  for (int digits : {16, 100, 300}) {
    const PrecisionConfig pc(digits);
    for (const char* s : {"0.01", "1.5", "33.3", "2500.5"}) {
      const Real x = pc.parse(s);
      Real lg(pc.bits()), dg(pc.bits());
      mpfr_lngamma(lg.get(), x.get(), MPFR_RNDN);
      mpfr_digamma(dg.get(), x.get(), MPFR_RNDN);
      EXPECT_LE(rel_err(log_gamma(x), lg), pc.epsilon() * 4) << digits << " " << s;
      EXPECT_LE(rel_err(digamma(x), dg), pc.epsilon() * 4) << digits << " " << s;
    }
  }
}

TEST(Gamma, DomainErrors) {
  EXPECT_THROW(log_gamma(kPc.real(0)), domain_error);
  EXPECT_THROW(gamma(kPc.real(-2)), domain_error);
  EXPECT_THROW(digamma(kPc.parse("-0.5")), domain_error);
  EXPECT_THROW(beta(kPc.real(1), kPc.real(0)), domain_error);
  Real nan(kPc.bits());
  mpfr_set_nan(nan.get());
  EXPECT_THROW(digamma(nan), domain_error);
}
