#pragma once

// Goodness of fit of an observed digit histogram against a theoretical PMF:
// Pearson chi-square with its p-value, plus the mean absolute deviation (MAD)
// conformity score used in digit-based auditing.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "benford_model.hpp"
#include "error.hpp"
#include "histogram.hpp"

namespace benford {

namespace gamma_detail {

inline constexpr int max_iterations = 100000;
inline constexpr double epsilon = 1e-16;

// P(a, x) by its power series; converges quickly for x < a + 1.
inline double lower_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < max_iterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * epsilon)
      break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by the Legendre continued fraction (modified Lentz), for x >= a + 1.
inline double upper_continued_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / epsilon;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < max_iterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny)
      d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny)
      c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < epsilon)
      break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace gamma_detail

// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
inline double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || std::isnan(x))
    throw validation_error("regularized_gamma_q needs a > 0 and x >= 0");
  if (x == 0.0)
    return 1.0;
  if (std::isinf(x))
    return 0.0;
  if (x < a + 1.0)
    return std::clamp(1.0 - gamma_detail::lower_series(a, x), 0.0, 1.0);
  return std::clamp(gamma_detail::upper_continued_fraction(a, x), 0.0, 1.0);
}

// Survival function of the chi-square distribution.
inline double chi_square_p_value(double statistic, unsigned degrees_of_freedom) {
  if (degrees_of_freedom == 0)
    return statistic > 0.0 ? 0.0 : 1.0;
  return regularized_gamma_q(0.5 * degrees_of_freedom, 0.5 * std::max(0.0, statistic));
}

enum class Verdict { close, acceptable, marginal, nonconforming };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::close: return "close";
  case Verdict::acceptable: return "acceptable";
  case Verdict::marginal: return "marginal";
  case Verdict::nonconforming: return "nonconforming";
  }
  return "?";
}

// Upper MAD limits for each verdict; anything above `marginal` is nonconforming.
struct MadThresholds {
  double close = 0.006;
  double acceptable = 0.012;
  double marginal = 0.015;

  Verdict classify(double mad) const {
    if (mad <= close)
      return Verdict::close;
    if (mad <= acceptable)
      return Verdict::acceptable;
    if (mad <= marginal)
      return Verdict::marginal;
    return Verdict::nonconforming;
  }
};

// Expected counts below this trigger the small-cell warning.
inline constexpr double min_expected_count = 5.0;

struct FitReport {
  double statistic_chi2 = 0.0;
  unsigned degrees_of_freedom = 0;
  double p_value = 1.0;
  double mad = 0.0;
  double max_deviation = 0.0;
  Verdict verdict = Verdict::close;
  std::size_t small_expected_cells = 0;
  std::vector<std::string> warnings;
};

// Fit against an arbitrary probability vector, index 0 = digit 1.
inline FitReport chi_square_fit(const DigitHistogram& observed, std::span<const double> probs,
                                const MadThresholds& thresholds = {}) {
  if (probs.size() != observed.counts().size())
    throw validation_error("expected distribution has " + std::to_string(probs.size()) +
                           " cells, histogram has " + std::to_string(observed.counts().size()));
  if (observed.total() == 0)
    throw validation_error("empty histogram");

  FitReport r;
  const double n = static_cast<double>(observed.total());
  const auto& counts = observed.counts();
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = probs[i];
    if (!(p > 0.0))
      throw validation_error("expected probability must be positive in every cell");
    const double e = n * p;
    const double o = static_cast<double>(counts[i]);
    r.statistic_chi2 += (o - e) * (o - e) / e;
    if (e < min_expected_count)
      ++r.small_expected_cells;
    const double dev = std::fabs(o / n - p);
    abs_sum += dev;
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  r.mad = abs_sum / static_cast<double>(counts.size());
  r.degrees_of_freedom = static_cast<unsigned>(counts.size() - 1);
  r.p_value = chi_square_p_value(r.statistic_chi2, r.degrees_of_freedom);
  r.verdict = thresholds.classify(r.mad);
  if (r.small_expected_cells > 0)
    r.warnings.push_back(std::to_string(r.small_expected_cells) +
                         " cell(s) with expected count below 5; chi-square p-value is unreliable");
  return r;
}

inline FitReport chi_square_fit(const DigitHistogram& observed, const BenfordPmf& expected,
                                const MadThresholds& thresholds = {}) {
  if (observed.radix() != expected.radix())
    throw validation_error("radix mismatch between histogram (base " +
                           observed.radix().to_string() + ") and PMF (base " +
                           expected.radix().to_string() + ")");
  return chi_square_fit(observed, std::span<const double>(expected.probs()), thresholds);
}

} // namespace benford
