#include <gtest/gtest.h>

#include "svinv/errors.hpp"
#include "svinv/rational.hpp"

using svinv::Rational;

TEST(Rational, ParseReducesToLowestTerms) {
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
  EXPECT_EQ(Rational::parse("0/5").str(), "0");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational::parse("-1/3").str(), "-1/3");
}

TEST(Rational, DenominatorIsPositive) {
  const Rational r(3, -6);
  EXPECT_EQ(r.str(), "-1/2");
  EXPECT_EQ(r.raw().get_den(), 2);
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1//2", "/2", "1/", " 1", "1/-2", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), svinv::ParseError) << bad;
  }
}

TEST(Rational, ArithmeticIsExact) {
  const Rational a = Rational::parse("1/3");
  const Rational b = Rational::parse("1/6");
  EXPECT_EQ((a + b).str(), "1/2");
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_EQ((a / b).str(), "2");
  EXPECT_EQ((-a).str(), "-1/3");
  EXPECT_THROW(a / Rational(0), svinv::DomainError);
}

TEST(Rational, OrderingAndPredicates) {
  EXPECT_LT(Rational(-1, 2), Rational(0));
  EXPECT_GT(Rational(7, 3), Rational(2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(4, 2).to_int64(), 2);
  EXPECT_THROW(Rational(1, 2).to_int64(), svinv::DomainError);
  EXPECT_EQ(Rational(-3).sign(), -1);
}

TEST(Rational, LargeValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 100; ++i) x *= Rational(3, 2);
  for (int i = 0; i < 100; ++i) x /= Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}
