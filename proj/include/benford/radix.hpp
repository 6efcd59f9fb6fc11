#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace benford {

// A number base: finite in [2, 64], or the symbolic infinite base in which
// every natural number is its own symbol.
class Radix {
public:
  static constexpr std::uint32_t min_base = 2;
  static constexpr std::uint32_t max_base = 64;

  static Radix finite(std::uint32_t base) {
    if (base < min_base || base > max_base)
      throw validation_error("base must be in [2, 64], got " + std::to_string(base));
    return Radix(base);
  }

  static constexpr Radix infinite() noexcept { return Radix(0); }

  constexpr bool is_infinite() const noexcept { return base_ == 0; }
  constexpr bool is_finite() const noexcept { return base_ != 0; }

  // Finite base value. Throws for the infinite radix.
  std::uint32_t value() const {
    if (is_infinite())
      throw validation_error("finite base required");
    return base_;
  }

  // Number of admissible leading digits (1 .. base-1).
  std::uint32_t digit_slots() const { return value() - 1; }

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(base_);
  }

  friend constexpr bool operator==(Radix, Radix) noexcept = default;

private:
  constexpr explicit Radix(std::uint32_t b) noexcept : base_(b) {}

  std::uint32_t base_;
};

// A first significant digit together with the radix it belongs to.
class Digit {
public:
  Digit(std::uint32_t value, Radix radix) : value_(value), radix_(radix) {
    if (value < 1 || value >= radix.value())
      throw validation_error("digit " + std::to_string(value) +
                             " out of range for base " + radix.to_string());
  }

  std::uint32_t value() const noexcept { return value_; }
  Radix radix() const noexcept { return radix_; }

  friend bool operator==(const Digit&, const Digit&) noexcept = default;

private:
  std::uint32_t value_;
  Radix radix_;
};

// Digits 0..9 print as themselves; anything larger as a bracketed tuple ("[10]").
inline std::string render_digit(std::uint32_t d) {
  if (d < 10)
    return std::string(1, static_cast<char>('0' + d));
  return "[" + std::to_string(d) + "]";
}

} // namespace benford
