#include <gtest/gtest.h>

#include "penney/rational.hpp"

using namespace penney;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(6, 8)), "3/4");
  EXPECT_EQ(to_string(make_rational(0, 5)), "0");
  EXPECT_EQ(to_string(make_rational(4, 4)), "1");
  EXPECT_EQ(to_string(parse_rational("10/16")), "5/8");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(make_rational(1, 0), Error);
}

TEST(Rational, SolvingTwiceGivesIdenticalFractions) {
  Rational a = make_rational(435, 913), b = make_rational(870, 1826);
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_string(a), to_string(b));
}

TEST(Odds, ReducedRatio) {
  EXPECT_EQ(to_string(odds_of(Rational(7, 8), Rational(1, 8))), "7 to 1");
  EXPECT_EQ(to_string(odds_of(Rational(49, 64), Rational(15, 64))), "49 to 15");
  EXPECT_EQ(to_string(odds_of(Rational(1, 3), Rational(1, 3))), "1 to 1");
  EXPECT_EQ(to_string(odds_of(Rational(1), Rational(0))), "1 to 0");
  EXPECT_THROW(odds_of(Rational(0), Rational(0)), Error);
}

TEST(Decimal, SignificantDigitsHalfEven) {
  EXPECT_EQ(to_decimal(Rational(435, 913), 2, false), ".48");
  EXPECT_EQ(to_decimal(Rational(43, 913), 2, false), ".047");
  EXPECT_EQ(to_decimal(Rational(71, 825), 2, false), ".086");
  EXPECT_EQ(to_decimal(Rational(3, 8), 4), "0.3750");
  EXPECT_EQ(to_decimal(Rational(7, 8), 2), "0.88");   // 0.875 -> even
  EXPECT_EQ(to_decimal(Rational(5, 8), 2), "0.62");   // 0.625 -> even
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.12");
  EXPECT_EQ(to_decimal(Rational(3, 40), 1), "0.08");  // 0.075 -> 0.08
  EXPECT_EQ(to_decimal(Rational(999, 1000), 2), "1.0");
  EXPECT_EQ(to_decimal(Rational(1), 4), "1.000");
  EXPECT_EQ(to_decimal(Rational(70), 4), "70.00");
  EXPECT_EQ(to_decimal(Rational(0), 3), "0.00");
  EXPECT_EQ(to_decimal(Rational(12345), 2), "12000");
}
