#include <gtest/gtest.h>

#include "aho2d/bigfloat.hpp"
#include "aho2d/quadratic.hpp"
#include "aho2d/rational.hpp"
#include "aho2d/symbolic.hpp"
#include "support/oracles.hpp"

namespace aho {
namespace {

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "x", "1/0", "1.2.3", "3/", "/2", "1e", "nan", "inf"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, FormatsCanonically) {
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(-4, 2)), "-2");
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(-1), 1);
  Rational root;
  EXPECT_TRUE(is_rational_square(Rational(9, 4), &root));
  EXPECT_EQ(root, Rational(3, 2));
  EXPECT_FALSE(is_rational_square(Rational(2)));
}

TEST(QuadraticNumber, FoldsRationalSurds) {
  const QuadraticNumber x(1, 2, Rational(9, 4));
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(x, QuadraticNumber(4));
  const QuadraticNumber y(0, 1, 12);
  EXPECT_EQ(y.radicand(), 3);
  EXPECT_EQ(y.surd_coefficient(), 2);
  const QuadraticNumber z = QuadraticNumber::surd(1, Rational(1, 3));
  EXPECT_EQ(z, QuadraticNumber(0, Rational(1, 3), 3));
}

TEST(QuadraticNumber, RendersSurds) {
  EXPECT_EQ(QuadraticNumber(Rational(73, 4), Rational(-1, 2), 85).to_string(), "(73-2*sqrt(85))/4");
  EXPECT_EQ(QuadraticNumber(0, Rational(-1, 2), 7).to_string(), "(-sqrt(7))/2");
  EXPECT_EQ(QuadraticNumber(0, 1, 3).to_string(), "sqrt(3)");
  EXPECT_EQ(QuadraticNumber(Rational(3, 2)).to_string(), "3/2");
}

TEST(QuadraticNumber, ArithmeticIsExact) {
  const QuadraticNumber s(1, 1, 2);
  EXPECT_EQ(s * s.conjugate(), QuadraticNumber(-1));
  EXPECT_EQ(QuadraticNumber(1) / s, QuadraticNumber(-1, 1, 2));
  EXPECT_EQ(s - s, QuadraticNumber(0));
  EXPECT_THROW(QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3), std::domain_error);
}

TEST(QuadraticNumber, OrdersByValue) {
  EXPECT_LT(QuadraticNumber(Rational(73, 4), Rational(-1, 2), 85), QuadraticNumber(Rational(63, 4)));
  EXPECT_GT(QuadraticNumber(0, 1, 2), QuadraticNumber(Rational(141, 100)));
  EXPECT_LT(QuadraticNumber(0, 1, 2), QuadraticNumber(Rational(1415, 1000)));
  // Equal values with different sign conventions compare equal.
  EXPECT_EQ(QuadraticNumber(1, -1, 8) <=> QuadraticNumber(1, -2, 2), std::strong_ordering::equal);
}

TEST(QuadraticNumber, OrderingMatchesDoubles) {
  testing::RationalSource src(11);
  for (int i = 0; i < 200; ++i) {
    const QuadraticNumber x(src.next(), src.next(), Rational(7));
    const QuadraticNumber y(src.next(), src.next(), Rational(7));
    const double dx = x.to_double();
    const double dy = y.to_double();
    if (std::abs(dx - dy) < 1e-9) continue;
    EXPECT_EQ(x < y, dx < dy);
  }
}

TEST(QuadraticNumber, SolvesMonicQuadratics) {
  // x² - 11x + (121 - 28)/4: roots (11 ± 2√7)/2
  auto [lo, hi] = solve_monic_quadratic(-11, Rational(93, 4));
  EXPECT_EQ(lo, QuadraticNumber(Rational(11, 2), -1, 7));
  EXPECT_EQ(hi, QuadraticNumber(Rational(11, 2), 1, 7));
  EXPECT_THROW(solve_monic_quadratic(0, 1), std::domain_error);
}

TEST(BigFloat, FormatsWithThirtyDigits) {
  EXPECT_EQ(BigFloat(Rational(3, 2), 256).to_string(), "1.5e+00");
  EXPECT_EQ(sqrt(BigFloat(2L, 256)).to_string(), "1.41421356237309504880168872421e+00");
  EXPECT_EQ(BigFloat(256).to_string(), "0");
  EXPECT_NEAR(pi(128).to_double(), M_PI, 1e-15);
}

TEST(BigFloat, MixedPrecisionWidens) {
  const BigFloat a(1L, 128);
  const BigFloat b(Rational(1, 3), 512);
  EXPECT_EQ((a + b).precision(), 512);
}

TEST(SymbolicScalar, PolynomialArithmetic) {
  const auto u = SymbolicScalar::variable("u");
  const auto e = SymbolicScalar::variable("E1");
  const SymbolicScalar p = (u + SymbolicScalar(1)) * (e - SymbolicScalar(2));
  EXPECT_EQ(p.degree("u"), 1);
  EXPECT_EQ(p.coefficient("u", 1), e - SymbolicScalar(2));
  EXPECT_EQ(p.substitute("u", Rational(-1)), SymbolicScalar());
  EXPECT_EQ(p.substitute("u", 1).substitute("E1", 3).constant(), Rational(2));
  EXPECT_THROW(static_cast<void>(p.constant()), std::logic_error);
  const QuadraticNumber v = p.evaluate({{"u", QuadraticNumber(0, 1, 2)}, {"E1", QuadraticNumber(3)}});
  EXPECT_EQ(v, QuadraticNumber(1, 1, 2));
  EXPECT_EQ((u * u).to_string(), "u^2");
}

}  // namespace
}  // namespace aho
