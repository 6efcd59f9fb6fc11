#pragma once

// Exact first-significant-digit extraction for big integers and decimal
// numerals in any finite radix. Everything here is integer arithmetic.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bignat.hpp"
#include "error.hpp"
#include "radix.hpp"

namespace benford {

namespace detail {

inline std::uint32_t require_finite(Radix radix) {
  if (radix.is_infinite())
    throw validation_error("finite base required");
  return radix.value();
}

inline void require_positive(const BigNat& n) {
  if (n.is_zero())
    throw error(error::kind::no_significant_digit, "no significant digit: value is zero");
}

// log2(base) when base is a power of two, otherwise 0.
inline unsigned pow2_exponent(std::uint32_t base) {
  return std::has_single_bit(base) ? static_cast<unsigned>(std::countr_zero(base)) : 0U;
}

// Largest power base^m that fits in a limb, with its exponent m.
struct ChunkPower {
  std::uint32_t power;
  unsigned digits;
};

inline ChunkPower chunk_power(std::uint32_t base) {
  std::uint64_t p = base;
  unsigned m = 1;
  while (p * base <= 0xFFFFFFFFULL) {
    p *= base;
    ++m;
  }
  return {static_cast<std::uint32_t>(p), m};
}

inline unsigned small_digit_count(std::uint32_t v, std::uint32_t base) {
  unsigned count = 0;
  do {
    v /= base;
    ++count;
  } while (v != 0);
  return count;
}

} // namespace detail

// Number of base-`radix` digits of n: the smallest L with n < base^L.
inline std::size_t digit_count(const BigNat& n, Radix radix) {
  const std::uint32_t base = detail::require_finite(radix);
  detail::require_positive(n);
  if (unsigned shift = detail::pow2_exponent(base); shift != 0)
    return (n.bit_length() + shift - 1) / shift;

  const auto chunk = detail::chunk_power(base);
  BigNat t = n;
  std::size_t count = 0;
  while (t.limb_count() > 1 || t.to_u64() >= chunk.power) {
    t.divmod_small(chunk.power);
    count += chunk.digits;
  }
  return count + detail::small_digit_count(static_cast<std::uint32_t>(t.to_u64()), base);
}

// Digits of n in `radix`, most significant first.
inline std::vector<std::uint32_t> digit_expansion(const BigNat& n, Radix radix) {
  const std::uint32_t base = detail::require_finite(radix);
  detail::require_positive(n);
  const auto chunk = detail::chunk_power(base);

  std::vector<std::uint32_t> rev;
  BigNat t = n;
  while (!t.is_zero()) {
    std::uint32_t r = t.divmod_small(chunk.power);
    if (t.is_zero()) {
      while (r != 0) {
        rev.push_back(r % base);
        r /= base;
      }
    } else {
      for (unsigned i = 0; i < chunk.digits; ++i) {
        rev.push_back(r % base);
        r /= base;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

// floor(n / base^(L-1)) where L = digit_count(n, radix).
inline Digit leading_digit_int(const BigNat& n, Radix radix) {
  const std::uint32_t base = detail::require_finite(radix);
  detail::require_positive(n);

  if (unsigned shift = detail::pow2_exponent(base); shift != 0) {
    std::size_t len = (n.bit_length() + shift - 1) / shift;
    BigNat top = n >> (shift * (len - 1));
    return {static_cast<std::uint32_t>(top.to_u64()), radix};
  }

  const auto chunk = detail::chunk_power(base);
  BigNat t = n;
  while (t.limb_count() > 1 || t.to_u64() >= chunk.power)
    t.divmod_small(chunk.power);
  auto v = static_cast<std::uint32_t>(t.to_u64());
  while (v >= base)
    v /= base;
  return {v, radix};
}

// A decimal numeral read exactly: value = (-1)^negative * mantissa / 10^scale
// when scale >= 0, or mantissa * 10^-scale otherwise.
struct DecimalNumeral {
  bool negative = false;
  std::string digits;  // mantissa digits with the point removed, as written
  std::int64_t scale = 0;

  bool is_zero() const noexcept { return digits.find_first_not_of('0') == std::string::npos; }
};

// Exponents beyond this are rejected so exact rational work stays bounded.
inline constexpr std::int64_t max_decimal_exponent = 10'000;

// Accepts [+-]? digits* ('.' digits*)? ([eE] [+-]? digits+)? with at least one
// mantissa digit. Returns nullopt for anything else.
inline std::optional<DecimalNumeral> parse_decimal_numeral(std::string_view s) {
  DecimalNumeral out;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    out.negative = s[i] == '-';
    ++i;
  }
  bool seen_point = false;
  std::int64_t frac_digits = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      out.digits.push_back(c);
      if (seen_point)
        ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (out.digits.empty())
    return std::nullopt;

  std::int64_t exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool neg_exp = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg_exp = s[i] == '-';
      ++i;
    }
    std::size_t start = i;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
      exponent = exponent * 10 + (s[i] - '0');
      if (exponent > max_decimal_exponent)
        return std::nullopt;
    }
    if (i == start)
      return std::nullopt;
    if (neg_exp)
      exponent = -exponent;
  }
  if (i != s.size())
    return std::nullopt;
  out.scale = frac_digits - exponent;
  return out;
}

inline DecimalNumeral parse_decimal_numeral_or_throw(std::string_view s) {
  auto parsed = parse_decimal_numeral(s);
  if (!parsed)
    throw error(error::kind::parse, "not a decimal numeral: '" + std::string(s) + "'");
  return *std::move(parsed);
}

// Base-10 first significant digit by scanning the mantissa characters.
inline Digit leading_digit_decimal_scan(const DecimalNumeral& num) {
  for (char c : num.digits) {
    if (c != '0')
      return {static_cast<std::uint32_t>(c - '0'), Radix::finite(10)};
  }
  throw error(error::kind::no_significant_digit, "no significant digit: value is zero");
}

// The unique d with d*base^e <= |value| < (d+1)*base^e, by exact rational
// comparison. Works for every finite base including 10.
inline Digit leading_digit_rational(const DecimalNumeral& num, Radix radix) {
  const std::uint32_t base = detail::require_finite(radix);
  if (num.is_zero())
    throw error(error::kind::no_significant_digit, "no significant digit: value is zero");

  BigNat numer = BigNat::from_decimal(num.digits);
  BigNat denom(1);
  if (num.scale >= 0)
    denom = BigNat::pow(10, static_cast<std::uint64_t>(num.scale));
  else
    numer *= BigNat::pow(10, static_cast<std::uint64_t>(-num.scale));

  if (numer >= denom)
    return leading_digit_int(numer / denom, radix);

  // |value| < 1: scale up by base until it reaches 1; the integer part is then d.
  while (numer < denom)
    numer.mul_small(base);
  return {static_cast<std::uint32_t>((numer / denom).to_u64()), radix};
}

// First significant digit of a decimal numeral string such as "-0.00312".
// Base 10 is a plain character scan; other bases use exact rationals.
inline Digit leading_digit_decimal_string(std::string_view s, Radix radix) {
  detail::require_finite(radix);
  DecimalNumeral num = parse_decimal_numeral_or_throw(s);
  if (radix.value() == 10)
    return leading_digit_decimal_scan(num);
  return leading_digit_rational(num, radix);
}

} // namespace benford
