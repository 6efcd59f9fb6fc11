#include <random>

#include <gtest/gtest.h>

#include "benford/bignat.hpp"
#include "oracles.hpp"

using benford::BigNat;

namespace {

BigNat random_bignat(std::mt19937_64& rng, std::size_t max_limbs) {
  std::uniform_int_distribution<std::size_t> len(1, max_limbs);
  BigNat r;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    r <<= 32;
    r += BigNat(rng() & 0xFFFFFFFFULL);
  }
  return r;
}

} // namespace

TEST(BigNat, ZeroIsCanonical) {
  BigNat z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, BigNat(0));
  EXPECT_EQ(z.limb_count(), 0U);
  EXPECT_EQ(z.to_decimal(), "0");
  BigNat x(5);
  x -= BigNat(5);
  EXPECT_EQ(x.limb_count(), 0U);
}

TEST(BigNat, DecimalRoundTrip) {
  const std::string s = "1267650600228229401496703205376";
  EXPECT_EQ(BigNat::from_decimal(s).to_decimal(), s);
  EXPECT_EQ(BigNat::from_decimal("000123").to_decimal(), "123");
  EXPECT_THROW(BigNat::from_decimal("12a"), benford::error);
  EXPECT_THROW(BigNat::from_decimal(""), benford::error);
}

TEST(BigNat, PowerMatchesDecimalOracle) {
  for (unsigned a : {2U, 3U, 7U, 10U}) {
    for (unsigned k : {0U, 1U, 31U, 32U, 33U, 64U, 100U, 257U}) {
      EXPECT_EQ(BigNat::pow(a, k).to_decimal(), oracle::to_string(oracle::power(a, k)))
          << a << "^" << k;
    }
  }
}

TEST(BigNat, ShiftsAndBits) {
  BigNat one(1);
  BigNat big = one << 100;
  EXPECT_EQ(big.bit_length(), 101U);
  EXPECT_TRUE(big.bit(100));
  EXPECT_FALSE(big.bit(99));
  EXPECT_EQ(big, BigNat::pow(2, 100));
  EXPECT_EQ(big >> 100, one);
  EXPECT_TRUE((big >> 101).is_zero());
  EXPECT_EQ(BigNat(0xFFFF'FFFF'FFFFULL).low_bits(16), BigNat(0xFFFF));
  EXPECT_EQ(big.low_bits(100), BigNat(0));
}

TEST(BigNat, SubtractionUnderflowThrows) {
  BigNat a(3);
  EXPECT_THROW(a -= BigNat(4), benford::error);
}

TEST(BigNat, DivmodSmall) {
  BigNat n = BigNat::from_decimal("123456789012345678901234567890");
  auto r = n.divmod_small(1'000'000'000U);
  EXPECT_EQ(r, 234567890U);
  EXPECT_EQ(n.to_decimal(), "123456789012345678901");
}

// q * d + r == n and r < d over random operands of mixed widths.
TEST(BigNat, LongDivisionProperty) {
  std::mt19937_64 rng(20261016);
  for (int iter = 0; iter < 2000; ++iter) {
    BigNat n = random_bignat(rng, 12);
    BigNat d = random_bignat(rng, 6);
    if (d.is_zero())
      continue;
    auto [q, r] = BigNat::divmod(n, d);
    EXPECT_LT(r, d);
    EXPECT_EQ(q * d + r, n);
  }
}

TEST(BigNat, LongDivisionEdgeCases) {
  // Divisors whose top limb forces the qhat correction paths.
  BigNat d = (BigNat(1) << 64) - BigNat(1);
  BigNat n = (BigNat(1) << 192) - BigNat(1);
  auto [q, r] = BigNat::divmod(n, d);
  EXPECT_EQ(q * d + r, n);
  EXPECT_LT(r, d);
  EXPECT_THROW(BigNat::divmod(n, BigNat{}), benford::error);
  EXPECT_EQ(BigNat::divmod(BigNat(5), BigNat(7)).second, BigNat(5));
}

TEST(BigNat, Ordering) {
  EXPECT_LT(BigNat(1), BigNat(2));
  EXPECT_LT(BigNat(0xFFFFFFFFULL), BigNat(0x100000000ULL));
  EXPECT_GT(BigNat::pow(10, 30), BigNat::pow(2, 99));
}
