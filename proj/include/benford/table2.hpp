#pragma once

// Leading-1 frequency of the powers a^0 .. a^(N-1) across many radices,
// side by side with the asymptotic value and a published reference column.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "benford_model.hpp"
#include "fixed_log.hpp"
#include "histogram.hpp"
#include "sequences.hpp"

namespace benford {

struct Table2Row {
  Radix base;
  std::uint64_t sample_size = 0;
  double empirical_p1 = 0.0;
  double asymptotic_p1 = 0.0;
  std::optional<double> published_p1;
};

// Published leading-1 frequencies of powers of two for bases 2..12; the
// infinite-base row is 0.00.
inline std::optional<double> published_leading_one(Radix base) {
  static constexpr double column[] = {1.00, 0.70, 0.65, 0.62, 0.55, 0.50,
                                      0.44, 0.38, 0.31, 0.25, 0.20};
  if (base.is_infinite())
    return 0.0;
  const std::uint32_t b = base.value();
  if (b >= 2 && b <= 12)
    return column[b - 2];
  return std::nullopt;
}

// Long-run frequency of leading digit 1 among powers of a in `base`.
// Commensurable a = r^p, base = r^q cycle through q/gcd(p,q) leading digits,
// exactly one of which is 1; otherwise frac(k log_base a) is equidistributed
// and the frequency is log_base 2.
inline double asymptotic_leading_one(std::uint64_t a, Radix base) {
  const std::uint32_t b = base.value();
  unsigned pa = 1;
  unsigned pb = 1;
  if (fixed::minimal_root(a, &pa) == fixed::minimal_root(b, &pb))
    return 1.0 / static_cast<double>(pb / std::gcd(pa, pb));
  return leading_one_probability(base);
}

inline Table2Row table2_row(Radix base, std::uint64_t n, std::uint32_t a = 2) {
  if (n < 1)
    throw validation_error("sample size must be >= 1");
  Table2Row row{base, n, 0.0, 0.0, published_leading_one(base)};
  if (base.is_infinite()) {
    row.empirical_p1 = limit_leading_one_probability(n);
    row.asymptotic_p1 = 0.0;
    return row;
  }
  auto seq = leading_digit_sequence(SequenceSpec::powers(a, n), base);
  DigitHistogram h = tally(seq.digits, base);
  row.empirical_p1 = static_cast<double>(h.count(1)) / static_cast<double>(h.total());
  row.asymptotic_p1 = asymptotic_leading_one(a, base);
  return row;
}

// One row per finite base in order, then the infinite-base row.
inline std::vector<Table2Row> table2(const std::vector<Radix>& bases, std::uint64_t n,
                                     std::uint32_t a = 2) {
  if (n < 1)
    throw validation_error("sample size must be >= 1");
  std::vector<Table2Row> rows;
  rows.reserve(bases.size() + 1);
  for (Radix b : bases) {
    if (b.is_infinite())
      continue;
    rows.push_back(table2_row(b, n, a));
  }
  rows.push_back(table2_row(Radix::infinite(), n, a));
  return rows;
}

} // namespace benford
