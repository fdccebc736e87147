#include <random>

#include <gtest/gtest.h>

#include "deficit/bits.hpp"
#include "deficit/rational.hpp"

using deficit::BigInt;
using deficit::Dyadic;
using deficit::Rational;

TEST(FloorLog2, UsesBitLength) {
  EXPECT_EQ(deficit::floor_log2(1), 0);
  EXPECT_EQ(deficit::floor_log2(2), 1);
  EXPECT_EQ(deficit::floor_log2(3), 1);
  // exact around powers of two, where a floating-point log2 rounds up
  for (int k = 1; k < 64; ++k) {
    const std::uint64_t p = std::uint64_t{1} << k;
    EXPECT_EQ(deficit::floor_log2(p - 1), k - 1);
    EXPECT_EQ(deficit::floor_log2(p), k);
  }
  EXPECT_THROW(deficit::floor_log2(0), std::domain_error);
}

TEST(IndexCap, Enforced) {
  EXPECT_NO_THROW(deficit::check_index(deficit::kMaxIndex));
  EXPECT_THROW(deficit::check_index(deficit::kMaxIndex + 1), std::out_of_range);
  EXPECT_THROW(deficit::to_index(-1), std::out_of_range);
}

TEST(Int128, ToString) {
  EXPECT_EQ(deficit::to_string(0), "0");
  EXPECT_EQ(deficit::to_string(-42), "-42");
  EXPECT_EQ(deficit::to_string(deficit::int128{1} << 100), "1267650600228229401496703205376");
}

TEST(Rational, LowestTerms) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).den(), 1);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FloorAndFrac) {
  EXPECT_EQ(Rational(BigInt(-7), BigInt(4)).floor(), -2);
  EXPECT_EQ(Rational(BigInt(-7), BigInt(4)).frac(), Rational(BigInt(1), BigInt(4)));
  EXPECT_EQ(Rational(BigInt(7), BigInt(4)).floor(), 1);
  EXPECT_EQ(Rational(BigInt(7), BigInt(4)).str(), "7/4");
  EXPECT_EQ(Rational(5).str(), "5");
}

TEST(Rational, FromWide) {
  const deficit::int128 big = (deficit::int128{1} << 90) + 3;
  EXPECT_EQ(Rational::from_wide(big).str(), deficit::to_string(big));
  EXPECT_EQ(Rational::from_wide(-big).str(), deficit::to_string(-big));
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(20190801);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  for (int i = 0; i < 2000; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (b != Rational(0)) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ(a.scaled(5).scaled(-5), a);
    EXPECT_EQ(a < b, a.num() * b.den() < b.num() * a.den());
  }
}

TEST(Dyadic, Canonical) {
  const Dyadic d(12, 4);  // 12/16 = 3/4
  EXPECT_EQ(d.num(), 3);
  EXPECT_EQ(d.exp(), 2);
  const Dyadic z(0, 9);
  EXPECT_EQ(z.num(), 0);
  EXPECT_EQ(z.exp(), 0);
  EXPECT_EQ(Dyadic(3, -2).num(), 12);
  EXPECT_EQ(Dyadic(3, -2).exp(), 0);
}

TEST(Dyadic, ArithmeticMatchesRational) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-5000, 5000);
  std::uniform_int_distribution<int> ex(0, 20);
  for (int i = 0; i < 2000; ++i) {
    const Dyadic a(num(rng), ex(rng)), b(num(rng), ex(rng));
    EXPECT_EQ((a + b).to_rational(), a.to_rational() + b.to_rational());
    EXPECT_EQ((a - b).to_rational(), a.to_rational() - b.to_rational());
    EXPECT_EQ((a * b).to_rational(), a.to_rational() * b.to_rational());
    EXPECT_EQ(a.scaled(-3).to_rational(), a.to_rational().scaled(-3));
    EXPECT_EQ(a < b, a.to_rational() < b.to_rational());
    // canonical form makes equality structural
    EXPECT_EQ(a == b, a.to_rational() == b.to_rational());
  }
}

TEST(Dyadic, OverflowIsReported) {
  EXPECT_THROW(Dyadic(1, 63), std::overflow_error);
  EXPECT_THROW(Dyadic(INT64_MAX, 0) + Dyadic(INT64_MAX, 0), std::overflow_error);
}
