#pragma once

// Generalized first-digit law P_b(d) = log_b(1 + 1/d), d = 1..b-1.

#include <cmath>
#include <cstdint>
#include <vector>

#include "error.hpp"
#include "radix.hpp"

namespace benford {

class BenfordPmf {
public:
  explicit BenfordPmf(Radix radix) : radix_(radix) {
    if (radix.is_infinite())
      throw validation_error("finite base required; use limit_leading_one_probability "
                             "for the infinite radix");
    const std::uint32_t base = radix.value();
    // Long double logs, rounded once to double.
    const long double ln_base = std::log(static_cast<long double>(base));
    probs_.reserve(base - 1);
    for (std::uint32_t d = 1; d < base; ++d) {
      long double p = std::log1p(1.0L / static_cast<long double>(d)) / ln_base;
      probs_.push_back(static_cast<double>(p));
    }
  }

  Radix radix() const noexcept { return radix_; }

  // Probability of leading digit d, 1 <= d <= base-1.
  double operator[](std::uint32_t d) const {
    if (d < 1 || d > probs_.size())
      throw validation_error("digit out of range for base " + radix_.to_string());
    return probs_[d - 1];
  }

  // Index 0 holds digit 1.
  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

private:
  Radix radix_;
  std::vector<double> probs_;
};

inline BenfordPmf benford_pmf(Radix radix) { return BenfordPmf(radix); }

// log_base(2), the chance of a leading 1.
inline double leading_one_probability(Radix radix) {
  if (radix.is_infinite())
    throw validation_error("finite base required; use limit_leading_one_probability");
  return static_cast<double>(std::log(2.0L) / std::log(static_cast<long double>(radix.value())));
}

// With one symbol per natural number, "1" shows up once (as 2^0) among the
// first N powers of two, so its frequency is 1/N.
inline double limit_leading_one_probability(std::uint64_t sample_size) {
  if (sample_size == 0)
    throw validation_error("sample size must be >= 1");
  return 1.0 / static_cast<double>(sample_size);
}

// Empirical first-digit frequencies reported in Benford's 1938 survey, d = 1..9.
inline constexpr double benford_1938_frequencies[9] = {
    0.306, 0.185, 0.124, 0.094, 0.080, 0.064, 0.051, 0.049, 0.047};

} // namespace benford
