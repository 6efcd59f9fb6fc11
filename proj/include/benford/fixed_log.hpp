#pragma once

// Fixed-point binary logarithms with a rigorous error bound, computed by
// repeated squaring on BigNat (no floating point).
//
// For x in [1, 2) scaled by 2^P, squaring once yields the next bit of
// log2(x): if x^2 >= 2 the bit is 1 and x^2/2 continues, otherwise x^2 does.
// Each squaring is truncated back to P bits. Writing w_j for the log of the
// truncated state, w_0 = sum b_i 2^-i + 2^-n w_n - sum eta_i 2^-(i+1) with
// |eta_i| <= 1.45 * 2^-P, so n bits carry error below 2^-n + 2^(1-P).

#include <array>
#include <bit>
#include <cstdint>

#include "bignat.hpp"
#include "error.hpp"

namespace benford::fixed {

// Fractional bits of every fixed-point value handed to callers.
inline constexpr unsigned fraction_bits = 128;
// Extra bits carried through logarithms and the ratio division.
inline constexpr unsigned guard_bits = 64;
inline constexpr unsigned working_bits = fraction_bits + guard_bits;

// floor-ish approximation of log2(x) * 2^bits, within 2 units of the last place.
inline BigNat log2_scaled(std::uint64_t x, unsigned bits) {
  if (x == 0)
    throw validation_error("log2 of zero");
  const unsigned int_part = static_cast<unsigned>(std::bit_width(x)) - 1;
  const unsigned precision = bits + 8;

  BigNat result = BigNat(int_part) << bits;
  // y = x / 2^int_part in [1, 2), scaled by 2^precision.
  BigNat y = BigNat(x) << precision;
  y >>= int_part;
  const BigNat two = BigNat(1) << (2 * precision + 1);

  for (unsigned i = 1; i <= bits; ++i) {
    BigNat sq = y * y;
    if (sq >= two) {
      result += BigNat(1) << (bits - i);
      y = sq >> (precision + 1);
    } else {
      y = sq >> precision;
    }
  }
  return result;
}

// log2(d) * 2^working_bits for d = 0..64 (entry 0 unused), built once.
inline const std::array<BigNat, 65>& small_log2_table() {
  static const std::array<BigNat, 65> table = [] {
    std::array<BigNat, 65> t{};
    for (std::uint64_t d = 1; d <= 64; ++d)
      t[d] = log2_scaled(d, working_bits);
    return t;
  }();
  return table;
}

inline BigNat log2_working(std::uint64_t x) {
  if (x <= 64)
    return small_log2_table()[x];
  return log2_scaled(x, working_bits);
}

// log_base(x) * 2^fraction_bits. Error at most 2 units of 2^-fraction_bits for
// x < 2^32 and 2 <= base <= 64: the inputs carry 2 ulps at working_bits each,
// which the guard bits shrink far below one output ulp, plus one ulp of
// truncation in the division.
inline BigNat log_ratio(std::uint64_t x, std::uint32_t base) {
  if (base < 2)
    throw validation_error("logarithm base must be >= 2");
  BigNat num = log2_working(x) << fraction_bits;
  return num / log2_working(base);
}

// Error bound, in ulps of 2^-fraction_bits, for any value returned by log_ratio.
inline constexpr std::uint64_t log_ratio_error_ulps = 2;

// Smallest r with x = r^e for some e >= 1.
inline std::uint64_t minimal_root(std::uint64_t x, unsigned* exponent = nullptr) {
  for (unsigned e = 63; e >= 2; --e) {
    // Integer e-th root by bisection on small ranges.
    std::uint64_t lo = 1;
    std::uint64_t hi = std::uint64_t{1} << ((64 + e - 1) / e);
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      // mid^e <= x ?
      std::uint64_t p = 1;
      bool over = false;
      for (unsigned i = 0; i < e && !over; ++i) {
        if (p > x / mid)
          over = true;
        else
          p *= mid;
      }
      if (over || p > x)
        hi = mid - 1;
      else
        lo = mid;
    }
    if (lo >= 2) {
      std::uint64_t p = 1;
      for (unsigned i = 0; i < e; ++i)
        p *= lo;
      if (p == x) {
        if (exponent != nullptr)
          *exponent = e;
        return lo;
      }
    }
  }
  if (exponent != nullptr)
    *exponent = 1;
  return x;
}

} // namespace benford::fixed
