#include "oracles.hpp"
#include "symcurv/errors.hpp"
#include "symcurv/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>

using symcurv::Rational;

TEST(Rational, LowestTermsAndSign) {
  Rational r(Rational::Integer(6), Rational::Integer(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rational(0).str(), "0");
  EXPECT_EQ(Rational(Rational::Integer(0), Rational::Integer(5)).denominator(), 1);
}

TEST(Rational, IntegersRenderWithoutDenominator) {
  EXPECT_EQ(Rational(7).str(), "7");
  EXPECT_EQ(Rational(Rational::Integer(10), Rational::Integer(5)).str(), "2");
  EXPECT_TRUE(Rational(-3).is_integer());
}

TEST(Rational, Arithmetic) {
  Rational a = Rational::parse("1/2");
  Rational b = Rational::parse("1/3");
  EXPECT_EQ((a + b).str(), "5/6");
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "1/6");
  EXPECT_EQ((a / b).str(), "3/2");
  EXPECT_EQ((-a).str(), "-1/2");
  EXPECT_EQ(symcurv::abs(-a), a);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(Rational::Integer(1), Rational::Integer(0)), symcurv::DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), symcurv::DivisionByZero);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "5", "-5", "12/7", "-1/18"}) EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational::parse("1/13"), Rational::parse("1/12"));
  EXPECT_GT(Rational::parse("-1/3"), Rational::parse("-1/2"));
  EXPECT_EQ(Rational::parse("2/4"), Rational::parse("1/2"));
}

TEST(Rational, Streaming) {
  std::ostringstream os;
  os << Rational::parse("3/9");
  EXPECT_EQ(os.str(), "1/3");
}

TEST(Rational, BigValuesStayExact) {
  Rational x(1);
  for (int k = 0; k < 200; ++k) x *= Rational(3);
  Rational y = x + Rational(1);
  EXPECT_EQ(y - x, Rational(1));
  EXPECT_EQ((Rational(1) / x) * x, Rational(1));
}

TEST(RationalProperty, FieldAxioms) {
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = oracle::random_rational(), b = oracle::random_rational(), c = oracle::random_rational();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_GT(a.denominator(), 0);
  }
}

TEST(RationalProperty, OrderMatchesDifferenceSign) {
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = oracle::random_rational(), b = oracle::random_rational();
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  }
}
