#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace s3c;
using namespace s3c::test;

TEST(Rational, ReducesAndKeepsPositiveDenominator) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
  EXPECT_EQ(Rational::parse("-7").str(), "-7/1");
  EXPECT_EQ(Rational(0).str(), "0/1");
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse("1/"), Error);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(factorial(0), 1);
}

TEST(GaussianRational, Examples) {
  EXPECT_EQ(*gq_arith(ArithOp::mul, Q(1) + I(), Q(1) - I()), Q(2));
  EXPECT_EQ(*gq_arith(ArithOp::add, Q(1, 2), Q(1, 3)), Q(5, 6));
  EXPECT_EQ(*gq_arith(ArithOp::div, I(), I()), Q(1));
  EXPECT_FALSE(gq_arith(ArithOp::div, Q(1), GQ()).has_value());
  EXPECT_EQ(gq_conj(Q(3, 2) - I()), Q(3, 2) + I());
  EXPECT_EQ(gq_conj(GQ()), GQ());
  EXPECT_EQ(gq_conj(I()), -I());
  EXPECT_TRUE(gq_is_real(Q(5, 7)));
  EXPECT_FALSE(gq_is_real(I()));
  EXPECT_TRUE(gq_is_real(GQ()));
}

TEST(GaussianRational, TextRoundTrip) {
  for (const char* s : {"1/2", "-3/4*i", "1/2+3/5*i", "-1/1-1/1*i", "0/1"})
    EXPECT_EQ(GQ::parse(s).str(), s);
  EXPECT_EQ(Q(-1).str(), "-1/1");
  EXPECT_THROW(GQ::parse(""), Error);
  EXPECT_THROW(GQ::parse("1/2+*i"), Error);
}

TEST(GaussianRational, FieldAxiomsOnRandomTriples) {
  auto r = gen::stream(0, "rational-test");
  for (int t = 0; t < 1000; ++t) {
    GQ a = gen::scalar(r), b = gen::scalar(r), c = gen::scalar(r);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a.conj() * a, GQ(a.norm2()));
    ASSERT_TRUE(a.norm2() >= Rational(0));
    ASSERT_EQ(a.norm2().is_zero(), a.is_zero());
    if (!b.is_zero()) {
      ASSERT_EQ((a / b) * b, a);
      ASSERT_EQ(b * (Q(1) / b), Q(1));
    }
  }
}
