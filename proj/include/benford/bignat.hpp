#pragma once

// bignat.hpp - arbitrary-precision nonnegative integer
//
// Little-endian 32-bit limbs, always canonical: no high zero limbs, and zero
// is the empty limb vector. Only what exact leading-digit work needs is here:
// add/sub, multiply, division (single limb and Knuth D), shifts, powers and
// decimal conversion.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace benford {

class BigNat {
public:
  using limb_t = std::uint32_t;
  using wide_t = std::uint64_t;
  static constexpr unsigned limb_bits = 32;

  BigNat() = default;

  BigNat(std::uint64_t v) { // NOLINT(google-explicit-constructor)
    while (v != 0) {
      limbs_.push_back(static_cast<limb_t>(v));
      v >>= limb_bits;
    }
  }

  // Parses a string of ASCII decimal digits (no sign, no separators).
  static BigNat from_decimal(std::string_view s) {
    if (s.empty())
      throw error(error::kind::parse, "empty decimal string");
    BigNat r;
    // Nine decimal digits at a time fit a limb.
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t take = std::min<std::size_t>(9, s.size() - i);
      limb_t chunk = 0;
      limb_t scale = 1;
      for (std::size_t j = 0; j < take; ++j) {
        char c = s[i + j];
        if (c < '0' || c > '9')
          throw error(error::kind::parse,
                      "invalid decimal digit in '" + std::string(s) + "'");
        chunk = chunk * 10 + static_cast<limb_t>(c - '0');
        scale *= 10;
      }
      r.mul_small(scale);
      r.add_small(chunk);
      i += take;
    }
    return r;
  }

  static BigNat pow(std::uint64_t base, std::uint64_t exp) {
    BigNat result(1);
    BigNat b(base);
    while (exp != 0) {
      if (exp & 1U)
        result = result * b;
      exp >>= 1;
      if (exp != 0)
        b = b * b;
    }
    return result;
  }

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::size_t limb_count() const noexcept { return limbs_.size(); }
  std::span<const limb_t> limbs() const noexcept { return limbs_; }

  std::size_t bit_length() const noexcept {
    if (limbs_.empty())
      return 0;
    return (limbs_.size() - 1) * limb_bits +
           static_cast<std::size_t>(std::bit_width(limbs_.back()));
  }

  bool bit(std::size_t i) const noexcept {
    std::size_t li = i / limb_bits;
    if (li >= limbs_.size())
      return false;
    return (limbs_[li] >> (i % limb_bits)) & 1U;
  }

  // Value as uint64 when it fits.
  bool fits_u64() const noexcept { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const {
    if (!fits_u64())
      throw validation_error("BigNat does not fit in 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      v = (v << limb_bits) | limbs_[i];
    return v;
  }

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) noexcept {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i])
        return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const BigNat&, const BigNat&) noexcept = default;

  BigNat& add_small(limb_t v) {
    wide_t carry = v;
    for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
      wide_t s = static_cast<wide_t>(limbs_[i]) + carry;
      limbs_[i] = static_cast<limb_t>(s);
      carry = s >> limb_bits;
    }
    if (carry != 0)
      limbs_.push_back(static_cast<limb_t>(carry));
    return *this;
  }

  BigNat& mul_small(limb_t v) {
    if (v == 0) {
      limbs_.clear();
      return *this;
    }
    wide_t carry = 0;
    for (auto& l : limbs_) {
      wide_t p = static_cast<wide_t>(l) * v + carry;
      l = static_cast<limb_t>(p);
      carry = p >> limb_bits;
    }
    if (carry != 0)
      limbs_.push_back(static_cast<limb_t>(carry));
    return *this;
  }

  // In-place quotient; returns the remainder.
  limb_t divmod_small(limb_t divisor) {
    if (divisor == 0)
      throw validation_error("division by zero");
    wide_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      wide_t cur = (rem << limb_bits) | limbs_[i];
      limbs_[i] = static_cast<limb_t>(cur / divisor);
      rem = cur % divisor;
    }
    trim();
    return static_cast<limb_t>(rem);
  }

  BigNat& operator+=(const BigNat& o) {
    if (o.limbs_.size() > limbs_.size())
      limbs_.resize(o.limbs_.size(), 0);
    wide_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      wide_t s = static_cast<wide_t>(limbs_[i]) + carry;
      if (i < o.limbs_.size())
        s += o.limbs_[i];
      limbs_[i] = static_cast<limb_t>(s);
      carry = s >> limb_bits;
      if (carry == 0 && i >= o.limbs_.size())
        break;
    }
    if (carry != 0)
      limbs_.push_back(static_cast<limb_t>(carry));
    return *this;
  }

  // Requires *this >= o.
  BigNat& operator-=(const BigNat& o) {
    if (*this < o)
      throw validation_error("BigNat subtraction would go negative");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow;
      if (i < o.limbs_.size())
        d -= o.limbs_[i];
      borrow = d < 0 ? 1 : 0;
      limbs_[i] = static_cast<limb_t>(d + (borrow << limb_bits));
      if (borrow == 0 && i >= o.limbs_.size())
        break;
    }
    trim();
    return *this;
  }

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }

  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    BigNat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      wide_t carry = 0;
      wide_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        wide_t t = ai * b.limbs_[j] + r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<limb_t>(t);
        carry = t >> limb_bits;
      }
      r.limbs_[i + b.limbs_.size()] = static_cast<limb_t>(carry);
    }
    r.trim();
    return r;
  }
  BigNat& operator*=(const BigNat& o) { return *this = *this * o; }

  BigNat& operator<<=(std::size_t bits) {
    if (is_zero() || bits == 0)
      return *this;
    std::size_t limb_shift = bits / limb_bits;
    unsigned bit_shift = static_cast<unsigned>(bits % limb_bits);
    if (bit_shift != 0) {
      limb_t carry = 0;
      for (auto& l : limbs_) {
        limb_t next = l >> (limb_bits - bit_shift);
        l = (l << bit_shift) | carry;
        carry = next;
      }
      if (carry != 0)
        limbs_.push_back(carry);
    }
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    return *this;
  }

  BigNat& operator>>=(std::size_t bits) {
    std::size_t limb_shift = bits / limb_bits;
    if (limb_shift >= limbs_.size()) {
      limbs_.clear();
      return *this;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    unsigned bit_shift = static_cast<unsigned>(bits % limb_bits);
    if (bit_shift != 0) {
      for (std::size_t i = 0; i < limbs_.size(); ++i) {
        limb_t hi = i + 1 < limbs_.size() ? limbs_[i + 1] : 0;
        limbs_[i] = (limbs_[i] >> bit_shift) | (hi << (limb_bits - bit_shift));
      }
    }
    trim();
    return *this;
  }

  friend BigNat operator<<(BigNat a, std::size_t bits) { return a <<= bits; }
  friend BigNat operator>>(BigNat a, std::size_t bits) { return a >>= bits; }

  // Keeps only the lowest `bits` bits.
  BigNat low_bits(std::size_t bits) const {
    BigNat r;
    std::size_t full = bits / limb_bits;
    std::size_t keep = std::min(limbs_.size(), full + 1);
    r.limbs_.assign(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(keep));
    if (r.limbs_.size() == full + 1) {
      unsigned rem = static_cast<unsigned>(bits % limb_bits);
      r.limbs_.back() &= rem == 0 ? 0U : (~limb_t{0} >> (limb_bits - rem));
    }
    r.trim();
    return r;
  }

  // Long division (Knuth, TAOCP vol. 2, algorithm D). Returns {quotient, remainder}.
  static std::pair<BigNat, BigNat> divmod(const BigNat& num, const BigNat& den) {
    if (den.is_zero())
      throw validation_error("division by zero");
    if (num < den)
      return {BigNat{}, num};
    if (den.limbs_.size() == 1) {
      BigNat q = num;
      limb_t r = q.divmod_small(den.limbs_[0]);
      return {std::move(q), BigNat(r)};
    }

    // Normalize so the divisor's top limb has its high bit set.
    unsigned shift = static_cast<unsigned>(std::countl_zero(den.limbs_.back()));
    BigNat v = den << shift;
    BigNat u = num << shift;
    u.limbs_.push_back(0);

    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() - n - 1;
    BigNat q;
    q.limbs_.assign(m + 1, 0);
    const wide_t base = wide_t{1} << limb_bits;
    const wide_t vtop = v.limbs_[n - 1];
    const wide_t vnext = v.limbs_[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
      wide_t top = (static_cast<wide_t>(u.limbs_[j + n]) << limb_bits) | u.limbs_[j + n - 1];
      wide_t qhat = top / vtop;
      wide_t rhat = top % vtop;
      while (qhat >= base || qhat * vnext > ((rhat << limb_bits) | u.limbs_[j + n - 2])) {
        --qhat;
        rhat += vtop;
        if (rhat >= base)
          break;
      }

      // u[j .. j+n] -= qhat * v
      std::int64_t borrow = 0;
      wide_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wide_t p = qhat * v.limbs_[i] + carry;
        carry = p >> limb_bits;
        std::int64_t t = static_cast<std::int64_t>(u.limbs_[i + j]) - borrow -
                         static_cast<std::int64_t>(p & 0xFFFFFFFFULL);
        borrow = t < 0 ? 1 : 0;
        u.limbs_[i + j] = static_cast<limb_t>(t + (borrow << limb_bits));
      }
      std::int64_t t = static_cast<std::int64_t>(u.limbs_[j + n]) - borrow -
                       static_cast<std::int64_t>(carry);
      borrow = t < 0 ? 1 : 0;
      u.limbs_[j + n] = static_cast<limb_t>(t + (borrow << limb_bits));

      if (borrow != 0) {
        // qhat was one too large; add v back.
        --qhat;
        wide_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
          wide_t s = static_cast<wide_t>(u.limbs_[i + j]) + v.limbs_[i] + c;
          u.limbs_[i + j] = static_cast<limb_t>(s);
          c = s >> limb_bits;
        }
        u.limbs_[j + n] = static_cast<limb_t>(u.limbs_[j + n] + c);
      }
      q.limbs_[j] = static_cast<limb_t>(qhat);
    }

    q.trim();
    u.limbs_.resize(n);
    u.trim();
    u >>= shift;
    return {std::move(q), std::move(u)};
  }

  friend BigNat operator/(const BigNat& a, const BigNat& b) { return divmod(a, b).first; }
  friend BigNat operator%(const BigNat& a, const BigNat& b) { return divmod(a, b).second; }

  std::string to_decimal() const {
    if (is_zero())
      return "0";
    BigNat t = *this;
    std::vector<limb_t> chunks; // base 10^9, least significant first
    while (!t.is_zero())
      chunks.push_back(t.divmod_small(1'000'000'000U));
    std::string s = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      s.append(9 - part.size(), '0');
      s += part;
    }
    return s;
  }

private:
  void trim() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0)
      limbs_.pop_back();
  }

  std::vector<limb_t> limbs_;
};

} // namespace benford
