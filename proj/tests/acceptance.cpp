// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "benford/benford.hpp"
#include "benford/cli.hpp"
#include "oracles.hpp"

using namespace benford;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> check;
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

const std::vector<std::string> sequence_one_args{"sequence", "--kind", "pow2", "--base", "10", "-n", "13"};

// 1. Sequence of first digits of 2^0..2^12 in base 10.
Outcome sequence_one_exact() {
  const auto t0 = clock_type::now();
  int code = 0;
  const std::string out = run_cli(sequence_one_args, code);
  const double secs = seconds_since(t0);
  const bool ok = code == 0 && out == "1 2 4 8 1 3 6 1 2 5 1 2 4\n" && secs < 1.0;
  std::string shown = out.empty() ? out : out.substr(0, out.size() - 1);
  return {ok, "output '" + shown + "' in " + fmt("%.4f s", secs)};
}

// 2. Units make up about 30% of that sequence.
Outcome about_thirty_percent() {
  int code = 0;
  std::istringstream in(run_cli(sequence_one_args, code));
  std::vector<std::uint32_t> digits;
  for (std::uint32_t d; in >> d;)
    digits.push_back(d);
  if (digits.size() != 13)
    return {false, "expected 13 digits"};
  const double f1 = static_cast<double>(std::count(digits.begin(), digits.end(), 1U)) / 13.0;
  const bool ok = std::fabs(f1 - 4.0 / 13.0) < 1e-15 && std::fabs(f1 - 0.31) <= 0.01;
  return {ok, "P(1) = " + fmt("%.4f", f1) + ", |P(1) - 0.31| = " + fmt("%.4f", std::fabs(f1 - 0.31))};
}

// 3. Benford's law against the 1938 survey column, and the six-fold gap.
Outcome survey_closeness() {
  double max_gap = 0.0;
  for (int d = 1; d <= 9; ++d)
    max_gap = std::max(max_gap, std::fabs(std::log10(1.0 + 1.0 / d) - benford_1938_frequencies[d - 1]));
  const auto pmf = benford_pmf(Radix::finite(10));
  const double ratio = pmf[1] / pmf[9];
  return {max_gap <= 0.01 && ratio > 6.0,
          "max gap " + fmt("%.5f", max_gap) + " (<= 0.01), P(1)/P(9) " + fmt("%.3f", ratio) + " (> 6)"};
}

// 4. Table endpoints: base 2, base 10 at N = 13, infinite base.
Outcome table_endpoints() {
  std::string detail;
  bool ok = true;
  for (std::uint64_t n : {1ULL, 2ULL, 13ULL, 100ULL, 1000ULL, 10000ULL}) {
    if (table2_row(Radix::finite(2), n).empirical_p1 != 1.0) {
      ok = false;
      detail += "base-2 row != 1 at N=" + std::to_string(n) + "; ";
    }
  }
  const double p10 = table2_row(Radix::finite(10), 13).empirical_p1;
  if (std::fabs(p10 - 0.308) > 0.005 || std::fabs(p10 - 0.31) > 0.005)
    ok = false;
  detail += "base 10 N=13: " + fmt("%.4f", p10) + "; ";

  // 1/N must equal the infinite row; it is <= 0.01 from N = 100 on and
  // strictly below for every larger N.
  for (std::uint64_t n : {100ULL, 101ULL, 1000ULL, 10000ULL, 20000ULL}) {
    const auto rows = table2({Radix::finite(10)}, n);
    const double inf = rows.back().empirical_p1;
    const bool bound = n == 100 ? inf <= 0.01 : inf < 0.01;
    if (!rows.back().base.is_infinite() || inf != 1.0 / static_cast<double>(n) || !bound) {
      ok = false;
      detail += "inf row wrong at N=" + std::to_string(n) + "; ";
    }
  }
  detail += "inf row = 1/N (0.01 at N=100, 5e-5 at N=2x10^4)";
  return {ok, detail};
}

// 5. Fast logarithmic digit vs exact big-integer digit, a = 2, k <= 10^4, bases 2..16.
Outcome fast_path_oracle() {
  const auto t0 = clock_type::now();
  constexpr std::uint64_t max_k = 10'000;
  std::uint64_t total = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t mismatches = 0;
  for (std::uint32_t b = 2; b <= 16; ++b) {
    const Radix radix = Radix::finite(b);
    const PowerDigitPredictor fast(2, radix);
    BigNat power(1);
    for (std::uint64_t k = 0; k <= max_k; ++k) {
      if (k != 0)
        power <<= 1;
      const Digit exact = leading_digit_int(power, radix);
      const FastDigit guess = fast.predict(k);
      ++total;
      Digit resolved = guess.digit;
      if (guess.confidence == Confidence::ambiguous) {
        ++ambiguous;
        resolved = leading_digit_int(power, radix); // fallback
      }
      if (resolved != exact)
        ++mismatches;
    }
  }
  const double secs = seconds_since(t0);
  const double rate = static_cast<double>(ambiguous) / static_cast<double>(total);
  const bool ok = mismatches == 0 && rate <= 0.001 && secs < 60.0;
  return {ok, std::to_string(total) + " triples, " + std::to_string(mismatches) + " mismatches, " +
                  std::to_string(ambiguous) + " ambiguous (" + fmt("%.4f%%", 100.0 * rate) + "), " +
                  fmt("%.2f s", secs)};
}

// 6. Rational-log cycles in bases 4 and 8.
Outcome rational_cycles() {
  const auto b4 = leading_digit_sequence(SequenceSpec::powers(2, 1001), Radix::finite(4)).values();
  const auto b8 = leading_digit_sequence(SequenceSpec::powers(2, 1001), Radix::finite(8)).values();
  const std::uint32_t cycle8[] = {1, 2, 4};
  for (std::size_t k = 0; k <= 1000; ++k) {
    if (b4[k] != (k % 2 == 0 ? 1U : 2U))
      return {false, "base 4 breaks the 1,2 cycle at k=" + std::to_string(k)};
    if (b8[k] != cycle8[k % 3])
      return {false, "base 8 breaks the 1,2,4 cycle at k=" + std::to_string(k)};
  }
  for (std::uint64_t n = 2; n <= 1000; n += 2)
    if (table2_row(Radix::finite(4), n).empirical_p1 != 0.5)
      return {false, "base 4 P(1) != 1/2 at N=" + std::to_string(n)};
  for (std::uint64_t n = 3; n <= 999; n += 3)
    if (table2_row(Radix::finite(8), n).empirical_p1 != 1.0 / 3.0)
      return {false, "base 8 P(1) != 1/3 at N=" + std::to_string(n)};
  return {true, "k <= 1000 cycles exact; P(1) = 1/2 and 1/3 at every multiple of the cycle"};
}

// 7. Normalization and monotonicity for every base 2..64.
Outcome normalization_monotonicity() {
  double worst_sum = 0.0;
  for (std::uint32_t b = 2; b <= 64; ++b) {
    const auto pmf = benford_pmf(Radix::finite(b));
    const auto& p = pmf.probs();
    worst_sum = std::max(worst_sum, std::fabs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0));
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!(p[i] > p[i + 1]))
        return {false, "PMF not strictly decreasing in base " + std::to_string(b)};
    if (b < 64 && !(leading_one_probability(Radix::finite(b)) > leading_one_probability(Radix::finite(b + 1))))
      return {false, "P(1) not strictly decreasing at base " + std::to_string(b)};
  }
  return {worst_sum <= 1e-12, "worst |sum - 1| = " + fmt("%.3e", worst_sum)};
}

// 8. Powers of two conform; p-values match an independent incomplete gamma.
Outcome convergence_and_p_values() {
  const Radix ten = Radix::finite(10);
  const auto digits = leading_digit_sequence(SequenceSpec::powers(2, 10'000), ten).digits;
  const FitReport fit = chi_square_fit(tally(digits, ten), benford_pmf(ten));

  // 20 (df, statistic) points; df spans integer and half-integer shape parameters.
  const unsigned dfs[] = {1, 2, 3, 5, 8, 8, 8, 8, 9, 11, 15, 20, 25, 30, 40, 50, 62, 63, 7, 4};
  const double stats[] = {0.3, 1.0, 2.7, 4.4, 0.5, 8.0, 15.5, 30.0, 12.0, 3.3,
                          25.0, 19.0, 40.0, 22.0, 55.0, 49.0, 70.0, 90.0, 14.1, 0.01};
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double mine = chi_square_p_value(stats[i], dfs[i]);
    const double ref = oracle::gamma_q_closed_form(dfs[i], stats[i] / 2.0);
    worst = std::max(worst, std::fabs(mine - ref));
  }
  return {fit.mad < 0.01 && worst <= 1e-8,
          "MAD at N=10^4 " + fmt("%.5f", fit.mad) + " (< 0.01), worst p-value gap " + fmt("%.2e", worst)};
}

// 9. Histogram algebra over 1000 random cases.
Outcome histogram_algebra() {
  std::mt19937_64 rng(0xBE7F0D);
  for (int c = 0; c < 1000; ++c) {
    const Radix r = Radix::finite(2 + static_cast<std::uint32_t>(rng() % 63));
    std::uniform_int_distribution<std::uint32_t> dig(1, r.value() - 1);
    auto random_stream = [&](std::size_t n) {
      std::vector<Digit> v;
      v.reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        v.emplace_back(dig(rng), r);
      return v;
    };
    const auto a = tally(random_stream(rng() % 200), r);
    const auto b = tally(random_stream(rng() % 200), r);
    const auto c3 = tally(random_stream(rng() % 200), r);
    const DigitHistogram zero(r);
    if (merge(merge(a, b), c3) != merge(a, merge(b, c3)))
      return {false, "associativity fails in case " + std::to_string(c)};
    if (merge(a, b) != merge(b, a))
      return {false, "commutativity fails in case " + std::to_string(c)};
    if (merge(a, zero) != a || merge(zero, a) != a)
      return {false, "identity fails in case " + std::to_string(c)};

    // Split one stream at random cut points; merged chunk tallies equal the whole.
    const auto stream = random_stream(1 + rng() % 500);
    std::vector<std::size_t> cuts{0, stream.size()};
    for (int k = 0, m = static_cast<int>(rng() % 6); k < m; ++k)
      cuts.push_back(rng() % (stream.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    DigitHistogram merged(r);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
      merged.merge(tally(std::span<const Digit>(stream).subspan(cuts[k], cuts[k + 1] - cuts[k]), r));
    if (merged != tally(stream, r))
      return {false, "chunked tally differs in case " + std::to_string(c)};
    if (parallel_tally(stream, r, 1 + rng() % 8) != merged)
      return {false, "parallel tally differs in case " + std::to_string(c)};
  }
  return {true, "1000 cases: associativity, commutativity, identity, chunking"};
}

// 10. String-scan and exact-rational first digits agree on random numerals.
Outcome ingestion_exactness() {
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<int> digit(0, 9);
  auto digits_of = [&](int n) {
    std::string s;
    for (int i = 0; i < n; ++i)
      s.push_back(static_cast<char>('0' + digit(rng)));
    return s;
  };

  std::ostringstream corpus;
  int built = 0;
  while (built < 1000) {
    std::string s;
    switch (rng() % 3) {
    case 0: s = "-"; break;
    case 1: s = "+"; break;
    default: break;
    }
    s += std::string(rng() % 4, '0');       // leading zeros
    s += digits_of(static_cast<int>(rng() % 8));
    if (rng() % 2 == 0)
      s += "." + std::string(rng() % 5, '0') + digits_of(1 + static_cast<int>(rng() % 10));
    auto num = parse_decimal_numeral(s);
    if (!num || num->is_zero())
      continue;
    corpus << s << '\n';
    ++built;
  }

  std::istringstream in(corpus.str());
  int agree = 0;
  int seen = 0;
  const Radix ten = Radix::finite(10);
  ingest({}, in, [&](std::string_view tok) {
    ++seen;
    const DecimalNumeral num = parse_decimal_numeral_or_throw(tok);
    if (leading_digit_decimal_scan(num) == leading_digit_rational(num, ten) &&
        leading_digit_decimal_string(tok, ten) == leading_digit_rational(num, ten))
      ++agree;
  });
  return {seen == 1000 && agree == 1000,
          std::to_string(agree) + "/" + std::to_string(seen) + " numerals agree"};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "sequence of powers of two, base 10", sequence_one_exact},
      {"AC2", "leading 1 makes up about 30%", about_thirty_percent},
      {"AC3", "law vs 1938 survey column; six-fold gap", survey_closeness},
      {"AC4", "multi-base table endpoints", table_endpoints},
      {"AC5", "fast path vs exact big integers", fast_path_oracle},
      {"AC6", "rational-log cycles in bases 4 and 8", rational_cycles},
      {"AC7", "normalization and monotonicity", normalization_monotonicity},
      {"AC8", "powers of two conform; p-value accuracy", convergence_and_p_values},
      {"AC9", "histogram algebra", histogram_algebra},
      {"AC10", "ingestion exactness", ingestion_exactness},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %-5s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    if (!o.pass)
      ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
