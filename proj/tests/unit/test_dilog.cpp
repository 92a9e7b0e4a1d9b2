#include <gtest/gtest.h>

#include "harmsum/errors.hpp"
#include "harmsum/special/dilog.hpp"
#include "support/properties.hpp"

using namespace harmsum;

namespace {

const PrecisionConfig kPc{50};

Complex C(const char* re, const char* im) { return Complex(kPc.parse(re), kPc.parse(im)); }

void expect_close(const Complex& got, const Complex& want, const Real& tol, const std::string& what) {
  EXPECT_LE(abs(got - want), tol) << what << ": got " << got.re.to_string(30) << " + " << got.im.to_string(30) << "i";
}

}  // namespace

// Reference values: mpmath polylog(2, z) at 70 digits.
TEST(Li2, ReferenceValues) {
  struct Case {
    const char *re, *im, *want_re, *want_im;
  };
  const Case cases[] = {
      {"0.5", "0", "0.5822405264650125059026563201596801087441984748061264254", "0"},
      {"-1", "0", "-0.8224670334241132182362075833230125946094749506033992189", "0"},
      {"1", "0", "1.644934066848226436472415166646025189218949901206798438", "0"},
      {"0", "1", "-0.2056167583560283045590518958307531486523687376508498047",
       "0.9159655941772190150546035149323841107741493742816721343"},
      {"2", "0", "2.467401100272339654708622749969037783828424851810197657",
       "-2.177586090303602130500688898237613947338583700369286294"},
      {"3", "2", "0.5557336284055069310279936201364981977036611287050647676",
       "3.449106803945984731605573596118983140718967241736124675"},
      {"-5", "0.5", "-2.754060835249228551342675062683881161390087375666624417",
       "0.1789728054661474036232221226936778676048692362186540318"},
      {"0.9", "0.4", "1.018274783210708973789807348007998224192109858079093454",
       "0.7633582459821352403024624417421648471655231148134268501"},
      {"0.25", "-0.75", "0.09750681958682916142662681648665303881386362473045913386",
       "-0.7952150805080155765205825501771834285327486930444129787"},
      {"-0.3", "-0.2", "-0.2870528778405284774786581959886154963963941350062573599",
       "-0.1744230846511636416998040352923885085553409842717621028"},
      {"10", "0", "0.5363012873578627365501597699378093189334848234279237053",
       "-7.233784412415464812490046550261791127602284508122629029"},
      {"1.5", "-1e-30", "2.374395270272480200677499763069544028862575318821506428",
       "-1.273806204919600530933131685580933795933979627529351377"},
  };
  const Real tol = kPc.parse("1e-48");
  for (const auto& c : cases) {
    expect_close(li2(C(c.re, c.im)), C(c.want_re, c.want_im), tol, std::string(c.re) + " + " + c.im + "i");
  }
}

TEST(Li2, ZeroAndSpecialPoints) {
  const bits_t b = kPc.bits();
  EXPECT_TRUE(li2(Complex(b)).is_zero());
  const Real pi2 = sqr(Real::pi(b));
  expect_close(li2(Complex(kPc.real(1))), Complex(pi2 / 6), kPc.parse("1e-49"), "Li2(1)");
  expect_close(li2(Complex(kPc.real(-1))), Complex(-pi2 / 12), kPc.parse("1e-49"), "Li2(-1)");
}

TEST(Li2, Delta1Argument) {
  const Real s3 = sqrt(kPc.real(3));
  const Complex z(kPc.real(1) / 2, 1 / (2 * s3));
  expect_close(li2(z),
               C("0.5345205744185216012997005956213397563055878738408466010", "0.3890117130045021948946499875315063868651103691013921239"),
               kPc.parse("1e-47"), "Li2(1/2 + i/(2 sqrt3))");
}

TEST(Li2, RealAxisBelowOneIsReal) {
  for (const char* x : {"-20", "-1.5", "-0.2", "0.3", "0.75", "0.999"}) {
    EXPECT_TRUE(li2(Complex(kPc.parse(x))).im.is_zero()) << x;
  }
}

TEST(Li2, AgreesWithDirectSeriesInsideSmallDisk) {
  const bits_t b = kPc.bits();
  for (const Complex& z : harmsum::testing::random_disk(40, 0.4, 7, b)) {
    Complex sum(b), power = z;
    for (long n = 1; n <= 400; ++n) {
      sum += power / (n * n);
      power *= z;
    }
    EXPECT_LE(abs(li2(z) - sum), kPc.epsilon() * 16);
  }
}

TEST(Li2, ConjugateSymmetryProperty) {
  const auto r = harmsum::testing::li2_conjugate_symmetry(kPc);
  EXPECT_TRUE(r.passed) << r.first_failure << " (worst ratio " << r.worst_ratio << ")";
  EXPECT_EQ(r.cases, 100);
}

TEST(Li2, ReflectionProperty) {
  const auto r = harmsum::testing::li2_reflection(kPc);
  EXPECT_TRUE(r.passed) << r.first_failure << " (worst ratio " << r.worst_ratio << ")";
  EXPECT_EQ(r.cases, 100);
}

TEST(Li2, PropertiesAtOtherPrecisions) {
  for (int digits : {16, 120}) {
    const PrecisionConfig pc(digits);
    EXPECT_TRUE(harmsum::testing::li2_conjugate_symmetry(pc, 30).passed) << digits;
    EXPECT_TRUE(harmsum::testing::li2_reflection(pc, 30).passed) << digits;
  }
}

TEST(Li2, NonFiniteArgument) {
  Real inf(kPc.bits());
  mpfr_set_inf(inf.get(), 1);
  EXPECT_THROW(li2(Complex(inf, kPc.real(0))), domain_error);
  EXPECT_THROW(dilog(Complex(kPc.real(0), inf)), domain_error);
}

TEST(Dilog, IsLi2OfOneMinus) {
  const Complex x = C("0.3", "-0.8");
  expect_close(dilog(x), li2(1 - x), kPc.epsilon() * 4, "dilog");
  EXPECT_TRUE(dilog(Complex(kPc.real(1))).is_zero());
}

TEST(Delta1, Value) {
  const Real d = delta1(kPc);
  EXPECT_LE(abs(d - kPc.parse("-0.77802342600900438978929997506301277373022073820278")), kPc.parse("1e-48"));
  EXPECT_LT(d, 0L);
}

TEST(Delta1, BracketIsPurelyImaginary) {
  const Delta1Expression e = delta1_expression(kPc);
  EXPECT_LE(abs(e.bracket.re), kPc.parse("1e-45"));
  EXPECT_LE(abs(e.value.im), kPc.parse("1e-45"));
  EXPECT_EQ(e.value.re, -e.bracket.im);
}
