#include <random>

#include <gtest/gtest.h>

#include "pretzelfill/rational.hpp"

using pretzelfill::BigInt;
using pretzelfill::Rational;

TEST(Rational, NormalizesOnConstruction) {
  const Rational r(BigInt(-54), BigInt(60));
  EXPECT_EQ(r.numerator(), -9);
  EXPECT_EQ(r.denominator(), 10);
  const Rational s(BigInt(27), BigInt(-30));
  EXPECT_EQ(s, r);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).denominator(), 1);
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), pretzelfill::invalid_input);
  EXPECT_THROW(Rational(1) / Rational(0), pretzelfill::invalid_input);
  EXPECT_THROW(Rational::parse("3/0"), pretzelfill::invalid_input);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(BigInt(7), BigInt(2)) - Rational(6), Rational(BigInt(-5), BigInt(2)));
  EXPECT_EQ(Rational(BigInt(1), BigInt(6)) * Rational(4), Rational(BigInt(2), BigInt(3)));
  EXPECT_EQ(Rational(1) - Rational(BigInt(1), BigInt(15)), Rational(BigInt(14), BigInt(15)));
  EXPECT_EQ(Rational(BigInt(2), BigInt(3)) / Rational(BigInt(4), BigInt(9)), Rational(BigInt(3), BigInt(2)));
}

TEST(Rational, OrderingIsExact) {
  const Rational a(BigInt(2), BigInt(3));
  const Rational b(BigInt(14), BigInt(15));
  EXPECT_LT(a, b);
  EXPECT_GT(-a, -b);
  // differ only past double precision
  const BigInt big = BigInt(1) << 80;
  EXPECT_LT(Rational(big, big + 1), Rational(big + 1, big + 2));
}

TEST(Rational, TextForm) {
  EXPECT_EQ(Rational(BigInt(-43), BigInt(30)).str(), "-43/30");
  EXPECT_EQ(Rational(BigInt(-5), BigInt(1)).str(), "-5");
  EXPECT_EQ(Rational::parse("-27/30").str(), "-9/10");
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  for (const char* bad : {"", "-", "1/", "/2", "1/-2", "a/b", "1.5", "+3"}) {
    EXPECT_THROW(Rational::parse(bad), pretzelfill::invalid_input) << bad;
  }
}

TEST(Rational, StringRoundTripProperty) {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000'000, 1'000'000'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
  for (int trial = 0; trial < 5000; ++trial) {
    const Rational r(BigInt(num(rng)) * BigInt(num(rng)), BigInt(den(rng)));
    EXPECT_EQ(boost::multiprecision::gcd(r.numerator(), r.denominator()), 1);
    EXPECT_GT(r.denominator(), 0);
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}
