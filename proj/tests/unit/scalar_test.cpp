#include <gtest/gtest.h>

#include "ledin/errors.hpp"
#include "ledin/scalar.hpp"

namespace ledin {
namespace {

TEST(ParseScalar, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_EQ(parse_scalar("-7"), Scalar(-7));
  EXPECT_EQ(parse_scalar("+3"), Scalar(3));
  EXPECT_EQ(parse_scalar("3/2"), Scalar(3, 2));
  EXPECT_EQ(parse_scalar("-10/4"), Scalar(-5, 2));
  EXPECT_EQ(parse_scalar("0/5"), Scalar(0));
  EXPECT_EQ(parse_scalar("123456789012345678901234567890"),
            Scalar(Integer("123456789012345678901234567890")));
}

TEST(ParseScalar, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1/", "/2", "3/-4", "1/0", "1.5", "a", "1/2/3", " 1", "--1", "2e3"}) {
    EXPECT_THROW(parse_scalar(bad), InvalidInput) << bad;
  }
}

TEST(ToString, LowestTermsWithoutUnitDenominator) {
  EXPECT_EQ(to_string(Scalar(6, 4)), "3/2");
  EXPECT_EQ(to_string(Scalar(-8, 4)), "-2");
  EXPECT_EQ(to_string(Scalar(0)), "0");
  for (const char* text : {"5/7", "-3", "0", "22/9", "-1/1000000007"}) {
    EXPECT_EQ(to_string(parse_scalar(text)), text);
  }
}

TEST(Pow, RepeatedSquaringMatchesRepeatedMultiplication) {
  for (const Scalar& base : {Scalar(0), Scalar(1), Scalar(-3), Scalar(5, 7), Scalar(-2, 3)}) {
    Scalar expected = 1;
    for (long e = 0; e <= 20; ++e) {
      EXPECT_EQ(pow(base, e), expected);
      expected *= base;
    }
  }
}

TEST(Pow, ZeroToTheZeroIsOneAndNegativeExponentsInvert) {
  EXPECT_EQ(pow(Scalar(0), 0), Scalar(1));
  EXPECT_EQ(pow(Integer(0), 0UL), Integer(1));
  EXPECT_EQ(pow(Scalar(2, 3), -3), Scalar(27, 8));
  EXPECT_EQ(pow(Scalar(-2), -1), Scalar(-1, 2));
  EXPECT_THROW(pow(Scalar(0), -1), std::domain_error);
}

TEST(Binomial, MatchesPascalTriangle) {
  std::vector<Integer> row{1};
  for (unsigned long n = 0; n <= 40; ++n) {
    for (unsigned long k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), row[k]) << n << "," << k;
    EXPECT_EQ(binomial(n, n + 1), 0);
    std::vector<Integer> next(n + 2, 1);
    for (unsigned long k = 1; k <= n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
}

TEST(SignPower, Alternates) {
  EXPECT_EQ(sign_power(0), 1);
  EXPECT_EQ(sign_power(3), -1);
  EXPECT_EQ(sign_power(-3), -1);
  EXPECT_EQ(sign_power(-4), 1);
}

}  // namespace
}  // namespace ledin
