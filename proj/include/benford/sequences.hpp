#pragma once

// Integer sequences whose leading digits are studied (powers, factorials,
// Fibonacci numbers, explicit lists), an exact streaming leading-digit path,
// and a certified logarithmic fast path for single powers.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bignat.hpp"
#include "error.hpp"
#include "fixed_log.hpp"
#include "leading_digit.hpp"
#include "radix.hpp"

namespace benford {

struct Powers {
  std::uint32_t base = 2;
};
struct Factorial {};
struct Fibonacci {};
struct Explicit {
  std::vector<BigNat> terms;
};

using SequenceKind = std::variant<Powers, Factorial, Fibonacci, Explicit>;

struct SequenceSpec {
  SequenceKind kind;
  std::size_t length = 1;

  static SequenceSpec powers(std::uint32_t a, std::size_t n) { return {Powers{a}, n}; }
  static SequenceSpec factorial(std::size_t n) { return {Factorial{}, n}; }
  static SequenceSpec fibonacci(std::size_t n) { return {Fibonacci{}, n}; }
  static SequenceSpec explicit_terms(std::vector<BigNat> terms) {
    std::size_t n = terms.size();
    return {Explicit{std::move(terms)}, n};
  }

  void validate() const {
    if (length < 1)
      throw validation_error("sequence length must be >= 1");
    if (const auto* p = std::get_if<Powers>(&kind); p != nullptr && p->base < 2)
      throw validation_error("powers base must be >= 2");
    if (const auto* e = std::get_if<Explicit>(&kind)) {
      if (e->terms.empty())
        throw validation_error("explicit sequence must be nonempty");
      if (e->terms.size() < length)
        throw validation_error("explicit sequence shorter than requested length");
      for (const auto& t : e->terms) {
        if (t.is_zero())
          throw validation_error("explicit sequence entries must be >= 1");
      }
    }
  }
};

// Single-consumer stream over the terms of a sequence. Holds only the state
// needed for the next term.
class TermStream {
public:
  explicit TermStream(SequenceSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

  std::optional<BigNat> next() {
    if (index_ >= spec_.length)
      return std::nullopt;
    BigNat out = std::visit([this](auto& k) { return step(k); }, spec_.kind);
    ++index_;
    return out;
  }

  std::size_t index() const noexcept { return index_; }

private:
  BigNat step(const Powers& p) {
    if (index_ == 0)
      current_ = BigNat(1);
    else
      current_.mul_small(p.base);
    return current_;
  }
  BigNat step(const Factorial&) {
    if (index_ == 0)
      current_ = BigNat(1);
    else
      current_.mul_small(static_cast<BigNat::limb_t>(index_ + 1));
    return current_;
  }
  BigNat step(const Fibonacci&) {
    if (index_ < 2) {
      previous_ = BigNat(1);
      current_ = BigNat(1);
      return current_;
    }
    BigNat sum = previous_ + current_;
    previous_ = std::move(current_);
    current_ = std::move(sum);
    return current_;
  }
  BigNat step(const Explicit& e) { return e.terms[index_]; }

  SequenceSpec spec_;
  std::size_t index_ = 0;
  BigNat current_;
  BigNat previous_;
};

inline std::vector<BigNat> generate(const SequenceSpec& spec) {
  TermStream stream(spec);
  std::vector<BigNat> out;
  out.reserve(spec.length);
  while (auto t = stream.next())
    out.push_back(*std::move(t));
  return out;
}

// A natural number stored directly in radix base^m chunks, least significant
// chunk first. Multiplying by a word and adding keep it exact, and the leading
// digit is read off the top chunk without any base conversion.
class RadixNat {
public:
  RadixNat(std::uint64_t value, Radix radix)
      : base_(radix.value()), chunk_(detail::chunk_power(base_)) {
    while (value != 0) {
      chunks_.push_back(static_cast<std::uint32_t>(value % chunk_.power));
      value /= chunk_.power;
    }
  }

  void mul_small(std::uint32_t v) {
    std::uint64_t carry = 0;
    for (auto& c : chunks_) {
      std::uint64_t p = static_cast<std::uint64_t>(c) * v + carry;
      c = static_cast<std::uint32_t>(p % chunk_.power);
      carry = p / chunk_.power;
    }
    while (carry != 0) {
      chunks_.push_back(static_cast<std::uint32_t>(carry % chunk_.power));
      carry /= chunk_.power;
    }
    trim();
  }

  void add(const RadixNat& o) {
    if (o.chunks_.size() > chunks_.size())
      chunks_.resize(o.chunks_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < chunks_.size(); ++i) {
      std::uint64_t s = static_cast<std::uint64_t>(chunks_[i]) + carry;
      if (i < o.chunks_.size())
        s += o.chunks_[i];
      chunks_[i] = static_cast<std::uint32_t>(s % chunk_.power);
      carry = s / chunk_.power;
    }
    if (carry != 0)
      chunks_.push_back(static_cast<std::uint32_t>(carry));
  }

  bool is_zero() const noexcept { return chunks_.empty(); }

  std::uint32_t leading_digit() const {
    if (chunks_.empty())
      throw error(error::kind::no_significant_digit, "no significant digit: value is zero");
    std::uint32_t top = chunks_.back();
    while (top >= base_)
      top /= base_;
    return top;
  }

private:
  void trim() {
    while (!chunks_.empty() && chunks_.back() == 0)
      chunks_.pop_back();
  }

  std::uint32_t base_;
  detail::ChunkPower chunk_;
  std::vector<std::uint32_t> chunks_;
};

struct LeadingDigitSeq {
  Radix radix;
  std::vector<Digit> digits;

  std::vector<std::uint32_t> values() const {
    std::vector<std::uint32_t> v;
    v.reserve(digits.size());
    for (const auto& d : digits)
      v.push_back(d.value());
    return v;
  }
};

// Leading digit of every term, computed exactly. Powers, factorials and
// Fibonacci numbers are accumulated in the target radix so each term costs
// time linear in its length; explicit terms go through leading_digit_int.
inline LeadingDigitSeq leading_digit_sequence(const SequenceSpec& spec, Radix radix) {
  spec.validate();
  detail::require_finite(radix);
  LeadingDigitSeq out{radix, {}};
  out.digits.reserve(spec.length);
  auto push = [&](std::uint32_t d) { out.digits.emplace_back(d, radix); };

  if (const auto* p = std::get_if<Powers>(&spec.kind)) {
    RadixNat value(1, radix);
    for (std::size_t i = 0; i < spec.length; ++i) {
      if (i != 0)
        value.mul_small(p->base);
      push(value.leading_digit());
    }
  } else if (std::holds_alternative<Factorial>(spec.kind)) {
    RadixNat value(1, radix);
    for (std::size_t i = 0; i < spec.length; ++i) {
      value.mul_small(static_cast<std::uint32_t>(i + 1));
      push(value.leading_digit());
    }
  } else if (std::holds_alternative<Fibonacci>(spec.kind)) {
    RadixNat prev(1, radix);
    RadixNat cur(1, radix);
    for (std::size_t i = 0; i < spec.length; ++i) {
      if (i >= 2) {
        RadixNat next = prev;
        next.add(cur);
        prev = std::move(cur);
        cur = std::move(next);
      }
      push(cur.leading_digit());
    }
  } else {
    const auto& terms = std::get<Explicit>(spec.kind).terms;
    for (std::size_t i = 0; i < spec.length; ++i)
      out.digits.push_back(leading_digit_int(terms[i], radix));
  }
  return out;
}

enum class Confidence { certain, ambiguous };

struct FastDigit {
  Digit digit;
  Confidence confidence;
};

// Predicts leading digits of a^k in one radix from the fractional part of
// k * log_base(a). Set up once per (a, base) and reuse across exponents.
//
// If a and base are powers of a common root r (a = r^p, base = r^q) the
// logarithm is the rational p/q and a^k = r^(kp) has leading digit
// r^(kp mod q) exactly. Otherwise the fixed-point value carries an error of
// k * e_ratio + e_boundary ulps, and the answer is certain only when the
// fractional part is farther than that from every boundary log_base(d).
class PowerDigitPredictor {
public:
  PowerDigitPredictor(std::uint64_t a, Radix radix) : a_(a), radix_(radix) {
    const std::uint32_t base = detail::require_finite(radix);
    if (a < 2)
      throw validation_error("power base must be >= 2");

    unsigned pa = 1;
    unsigned pb = 1;
    std::uint64_t ra = fixed::minimal_root(a, &pa);
    std::uint64_t rb = fixed::minimal_root(base, &pb);
    if (ra == rb) {
      root_ = ra;
      root_exp_a_ = pa;
      root_exp_base_ = pb;
      return;
    }

    ratio_ = fixed::log_ratio(a, base);
    boundaries_.reserve(base + 1);
    boundaries_.emplace_back(); // log(1) = 0, exact
    for (std::uint32_t d = 2; d < base; ++d)
      boundaries_.push_back(fixed::log_ratio(d, base));
    boundaries_.push_back(BigNat(1) << fixed::fraction_bits); // log(base) = 1, exact
  }

  bool exact_rational() const noexcept { return root_ != 0; }

  FastDigit predict(std::uint64_t k) const {
    if (k == 0)
      return {Digit(1, radix_), Confidence::certain};

    if (exact_rational()) {
      // (k * pa) mod pb, then r to that power; r^(pb-1) < base so it fits.
      unsigned __int128 e = static_cast<unsigned __int128>(k) * root_exp_a_;
      auto rem = static_cast<unsigned>(e % root_exp_base_);
      std::uint64_t d = 1;
      for (unsigned i = 0; i < rem; ++i)
        d *= root_;
      return {Digit(static_cast<std::uint32_t>(d), radix_), Confidence::certain};
    }

    const BigNat scaled = BigNat(k) * ratio_;
    const BigNat frac = scaled.low_bits(fixed::fraction_bits);
    // The ratio error is multiplied by k; each boundary carries its own.
    const BigNat tolerance =
        BigNat(k) * BigNat(fixed::log_ratio_error_ulps) + BigNat(fixed::log_ratio_error_ulps);

    std::uint32_t digit = 1;
    bool certain = true;
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
      const BigNat& b = boundaries_[i];
      const BigNat dist = frac >= b ? frac - b : b - frac;
      if (dist <= tolerance)
        certain = false;
      if (i + 1 < boundaries_.size() && frac >= b)
        digit = static_cast<std::uint32_t>(i + 1);
    }
    return {Digit(digit, radix_), certain ? Confidence::certain : Confidence::ambiguous};
  }

  std::uint64_t power_base() const noexcept { return a_; }
  Radix radix() const noexcept { return radix_; }

private:
  std::uint64_t a_;
  Radix radix_;
  std::uint64_t root_ = 0;
  unsigned root_exp_a_ = 0;
  unsigned root_exp_base_ = 0;
  BigNat ratio_;
  std::vector<BigNat> boundaries_; // log_base(d) * 2^F for d = 1..base
};

// Fast leading digit of a^k with a confidence flag.
inline FastDigit leading_digit_power_fast(std::uint64_t a, std::uint64_t k, Radix radix) {
  return PowerDigitPredictor(a, radix).predict(k);
}

// Leading digit of a^k, always correct: ambiguous fast results fall back to
// the exact big-integer path.
inline Digit leading_digit_power(std::uint64_t a, std::uint64_t k, Radix radix) {
  FastDigit fast = leading_digit_power_fast(a, k, radix);
  if (fast.confidence == Confidence::certain)
    return fast.digit;
  return leading_digit_int(BigNat::pow(a, k), radix);
}

} // namespace benford
