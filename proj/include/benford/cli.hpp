#pragma once

// Command-line front end: pmf, sequence, table1, table2 and analyze.
// Exit codes: 0 success, 1 validation or usage error, 2 I/O error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "benford_model.hpp"
#include "error.hpp"
#include "fit.hpp"
#include "histogram.hpp"
#include "ingest.hpp"
#include "leading_digit.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "table2.hpp"

namespace benford::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_io = 2;

namespace detail {

inline std::uint64_t parse_unsigned(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw validation_error(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return v;
}

inline SequenceSpec parse_kind(const std::string& kind, std::size_t n) {
  if (kind == "pow2")
    return SequenceSpec::powers(2, n);
  if (kind == "fact")
    return SequenceSpec::factorial(n);
  if (kind == "fib")
    return SequenceSpec::fibonacci(n);
  if (kind.rfind("powa:", 0) == 0) {
    std::uint64_t a = parse_unsigned(std::string_view(kind).substr(5), "power base");
    if (a < 2 || a > 0xFFFFFFFFULL)
      throw validation_error("power base must be in [2, 2^32-1]");
    return SequenceSpec::powers(static_cast<std::uint32_t>(a), n);
  }
  throw validation_error("unknown sequence kind '" + kind + "' (expected pow2, powa:<a>, fact, fib)");
}

// "lo..hi" or a comma-separated list.
inline std::vector<Radix> parse_bases(const std::string& spec) {
  std::vector<Radix> out;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    auto lo = parse_unsigned(std::string_view(spec).substr(0, dots), "base range");
    auto hi = parse_unsigned(std::string_view(spec).substr(dots + 2), "base range");
    if (lo > hi)
      throw validation_error("empty base range '" + spec + "'");
    for (auto b = lo; b <= hi; ++b)
      out.push_back(Radix::finite(static_cast<std::uint32_t>(std::min<std::uint64_t>(b, 1000))));
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = parse_unsigned(item, "base");
    out.push_back(Radix::finite(static_cast<std::uint32_t>(std::min<std::uint64_t>(b, 1000))));
  }
  if (out.empty())
    throw validation_error("no bases given");
  return out;
}

inline Radix parse_radix(std::uint64_t b) {
  return Radix::finite(static_cast<std::uint32_t>(std::min<std::uint64_t>(b, 1000)));
}

inline std::string fmt6(double v) { return format_fixed(v, 6); }

inline void add_histogram_rows(ReportDocument& doc, const DigitHistogram& h) {
  doc.columns = {"digit", "count", "frequency"};
  for (std::uint32_t d = 1; d <= h.counts().size(); ++d) {
    const double f = h.total() ? static_cast<double>(h.count(d)) / static_cast<double>(h.total()) : 0.0;
    doc.rows.push_back({render_digit(d), std::to_string(h.count(d)), fmt6(f)});
  }
}

// Theoretical law for base 10 beside the 1938 survey column.
inline void add_reference_rows(ReportDocument& doc, const BenfordPmf& pmf, ordered_json& rows) {
  doc.columns = {"digit", "benford", "survey_1938", "delta"};
  for (std::uint32_t d = 1; d <= 9; ++d) {
    const double ref = benford_1938_frequencies[d - 1];
    const double delta = ref - pmf[d];
    rows.push_back({{"digit", d},
                    {"probability", round_significant(pmf[d])},
                    {"survey_1938", round_significant(ref)},
                    {"delta", round_significant(delta)}});
    doc.rows.push_back({render_digit(d), fmt6(pmf[d]), format_fixed(ref, 3), fmt6(delta)});
  }
}

inline ReportDocument pmf_report(Radix base) {
  ReportDocument doc;
  doc.mode = "pmf";
  doc.base = radix_json(base);
  const BenfordPmf pmf = benford_pmf(base);
  ordered_json rows = ordered_json::array();
  if (base.value() == 10) {
    add_reference_rows(doc, pmf, rows);
  } else {
    doc.columns = {"digit", "benford"};
    for (std::uint32_t d = 1; d < base.value(); ++d) {
      rows.push_back({{"digit", d}, {"probability", round_significant(pmf[d])}});
      doc.rows.push_back({render_digit(d), fmt6(pmf[d])});
    }
  }
  doc.payload.emplace_back("rows", std::move(rows));
  return doc;
}

inline ReportDocument table1_report() {
  const Radix base = Radix::finite(10);
  ReportDocument doc;
  doc.mode = "table1";
  doc.base = 10;
  const BenfordPmf pmf = benford_pmf(base);
  ordered_json rows = ordered_json::array();
  add_reference_rows(doc, pmf, rows);

  double max_abs = 0.0;
  std::vector<std::uint64_t> counts;
  for (std::uint32_t d = 1; d <= 9; ++d) {
    max_abs = std::max(max_abs, std::fabs(benford_1938_frequencies[d - 1] - pmf[d]));
    counts.push_back(static_cast<std::uint64_t>(std::lround(1000.0 * benford_1938_frequencies[d - 1])));
  }
  const FitReport fit = chi_square_fit(DigitHistogram(base, counts), pmf);
  const double ratio_theory = pmf[1] / pmf[9];
  const double ratio_survey = benford_1938_frequencies[0] / benford_1938_frequencies[8];

  doc.payload.emplace_back("rows", std::move(rows));
  doc.payload.emplace_back("summary",
                           ordered_json{{"max_abs_delta", round_significant(max_abs)},
                                        {"ratio_1_to_9_benford", round_significant(ratio_theory)},
                                        {"ratio_1_to_9_survey", round_significant(ratio_survey)}});
  doc.payload.emplace_back("fit", fit_json(fit));
  doc.notes = {"max |delta|: " + fmt6(max_abs),
               "P(1)/P(9): benford " + format_fixed(ratio_theory, 3) + ", survey " +
                   format_fixed(ratio_survey, 3),
               "survey vs benford (counts per 1000): MAD " + fmt6(fit.mad) + ", chi2 " +
                   format_fixed(fit.statistic_chi2, 4) + ", p " + format_fixed(fit.p_value, 4) +
                   ", verdict " + to_string(fit.verdict)};
  return doc;
}

inline ReportDocument sequence_report(const std::string& kind, const SequenceSpec& spec, Radix base,
                                      bool with_tally) {
  ReportDocument doc;
  doc.mode = "sequence";
  doc.base = radix_json(base);
  const LeadingDigitSeq seq = leading_digit_sequence(spec, base);

  ordered_json digits = ordered_json::array();
  std::string line;
  for (const auto& d : seq.digits) {
    digits.push_back(d.value());
    if (!line.empty())
      line += ' ';
    line += render_digit(d.value());
  }
  doc.payload.emplace_back("kind", kind);
  doc.payload.emplace_back("n", spec.length);
  doc.payload.emplace_back("digits", std::move(digits));
  doc.preamble.push_back(line);
  if (with_tally) {
    const DigitHistogram h = tally(seq.digits, base);
    doc.payload.emplace_back("histogram", histogram_json(h));
    add_histogram_rows(doc, h);
  } else {
    doc.table_in_text = false;
    doc.columns = {"index", "digit"};
    for (std::size_t i = 0; i < seq.digits.size(); ++i)
      doc.rows.push_back({std::to_string(i), render_digit(seq.digits[i].value())});
  }
  return doc;
}

inline ReportDocument table2_report(const std::vector<Radix>& bases, std::uint64_t n, std::uint32_t a) {
  ReportDocument doc;
  doc.mode = "table2";
  doc.base_key = "bases";
  doc.base = ordered_json::array();
  for (Radix b : bases)
    doc.base.push_back(radix_json(b));
  doc.base.push_back("inf");

  const auto rows = table2(bases, n, a);
  ordered_json jrows = ordered_json::array();
  doc.columns = {"base", "n", "computed_p1", "asymptotic_p1", "published_p1"};
  for (const auto& r : rows) {
    jrows.push_back(table2_row_json(r));
    doc.rows.push_back({r.base.to_string(), std::to_string(r.sample_size), fmt6(r.empirical_p1),
                        fmt6(r.asymptotic_p1), r.published_p1 ? format_fixed(*r.published_p1, 2) : "-"});
  }
  doc.payload.emplace_back("n", n);
  doc.payload.emplace_back("seq_base", a);
  doc.payload.emplace_back("rows", std::move(jrows));
  doc.notes = {"computed_p1: leading-1 frequency over a^0..a^(n-1); inf row is 1/n",
               "published_p1: reference column for bases 2..12 and inf, shown for comparison"};
  return doc;
}

struct AnalyzeOptions {
  std::string path;
  DatasetSource source;
  Radix base = Radix::finite(10);
  std::size_t jobs = 1;
};

inline ReportDocument analyze_stream(std::istream& in, const AnalyzeOptions& opt) {
  std::vector<Digit> digits;
  std::uint64_t zeros = 0;
  const IngestStats stats = ingest(opt.source, in, [&](std::string_view tok) {
    DecimalNumeral num = parse_decimal_numeral_or_throw(tok);
    if (num.is_zero()) {
      ++zeros;
      return;
    }
    digits.push_back(opt.base.value() == 10 ? leading_digit_decimal_scan(num)
                                            : leading_digit_rational(num, opt.base));
  });

  ReportDocument doc;
  doc.mode = "analyze";
  doc.base = radix_json(opt.base);
  doc.warnings = stats.warnings();
  if (zeros > 0)
    doc.warnings.push_back("skipped " + std::to_string(zeros) + " zero value(s) with no significant digit");

  const DigitHistogram h = parallel_tally(digits, opt.base, opt.jobs);
  doc.payload.emplace_back("histogram", histogram_json(h));
  add_histogram_rows(doc, h);
  doc.payload.emplace_back("records", ordered_json{{"read", stats.records},
                                                   {"analyzed", h.total()},
                                                   {"skipped", stats.skipped() + zeros}});
  if (h.total() == 0) {
    doc.payload.emplace_back("fit", nullptr);
    doc.warnings.push_back("no numerals to analyze");
    return doc;
  }
  const FitReport fit = chi_square_fit(h, benford_pmf(opt.base));
  doc.payload.emplace_back("fit", fit_json(fit));
  for (const auto& w : fit.warnings)
    doc.warnings.push_back(w);
  doc.notes = {"n " + std::to_string(h.total()) + ", chi2 " + format_fixed(fit.statistic_chi2, 4) +
                   " (df " + std::to_string(fit.degrees_of_freedom) + "), p " +
                   format_fixed(fit.p_value, 6),
               "MAD " + fmt6(fit.mad) + ", max deviation " + fmt6(fit.max_deviation) + ", verdict " +
                   to_string(fit.verdict)};
  return doc;
}

inline ReportDocument analyze_file(const AnalyzeOptions& opt) {
  std::ifstream in(opt.path, std::ios::binary);
  if (!in)
    throw error(error::kind::io, "cannot open '" + opt.path + "'");
  return analyze_stream(in, opt);
}

inline void add_format_flags(CLI::App* cmd, bool& json, bool& csv) {
  auto* j = cmd->add_flag("--json", json, "Emit JSON");
  auto* c = cmd->add_flag("--csv", csv, "Emit CSV");
  j->excludes(c);
}

inline OutputFormat pick_format(bool json, bool csv) {
  return json ? OutputFormat::json : csv ? OutputFormat::csv : OutputFormat::text;
}

} // namespace detail

// Runs one command line, writing the report to `out` and diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-significant-digit statistics in arbitrary bases"};
  app.name("benford_cli");
  app.require_subcommand(1);

  bool json = false;
  bool csv = false;

  std::uint64_t pmf_base = 10;
  auto* pmf = app.add_subcommand("pmf", "Theoretical first-digit distribution for one base");
  pmf->add_option("--base,-b", pmf_base, "Number base (2..64)")->required();
  detail::add_format_flags(pmf, json, csv);

  std::string kind = "pow2";
  std::uint64_t seq_base = 10;
  std::uint64_t seq_n = 0;
  bool seq_tally = false;
  bool emit_values = false;
  auto* seq = app.add_subcommand("sequence", "Leading digits of a generated sequence");
  seq->add_option("--kind,-k", kind, "pow2 | powa:<a> | fact | fib")->required();
  seq->add_option("--base,-b", seq_base, "Number base (2..64)")->required();
  seq->add_option("-n", seq_n, "Number of terms")->required();
  seq->add_flag("--tally", seq_tally, "Report the leading-digit histogram");
  seq->add_flag("--emit-values", emit_values, "Print the term values, one per line");
  detail::add_format_flags(seq, json, csv);

  auto* t1 = app.add_subcommand("table1", "Benford's law against the 1938 survey frequencies");
  detail::add_format_flags(t1, json, csv);

  std::uint64_t t2_n = 0;
  std::string t2_bases = "2..12";
  std::uint64_t t2_seq_base = 2;
  auto* t2 = app.add_subcommand("table2", "Leading-1 frequency of powers across bases");
  t2->add_option("-n", t2_n, "Number of powers a^0..a^(n-1)")->required();
  t2->add_option("--bases", t2_bases, "lo..hi or comma list")->capture_default_str();
  t2->add_option("--seq-base", t2_seq_base, "Power base a")->capture_default_str();
  detail::add_format_flags(t2, json, csv);

  detail::AnalyzeOptions aopt;
  std::string format = "lines";
  std::string column;
  std::uint64_t an_base = 10;
  auto* an = app.add_subcommand("analyze", "First-digit audit of a dataset file");
  an->add_option("path", aopt.path, "Input file")->required();
  an->add_option("--format", format, "csv | lines")->capture_default_str()->check(CLI::IsMember({"csv", "lines"}));
  an->add_option("--column", column, "CSV column name or 0-based index");
  an->add_flag("--skip-header", aopt.source.skip_header, "Ignore the first record");
  an->add_option("--base,-b", an_base, "Number base (2..64)")->capture_default_str();
  an->add_option("--jobs,-j", aopt.jobs, "Parallel tally workers")->capture_default_str();
  detail::add_format_flags(an, json, csv);

  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    argv.push_back(*it);
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_validation;
  }

  try {
    const OutputFormat fmt = detail::pick_format(json, csv);
    if (*pmf) {
      render(detail::pmf_report(detail::parse_radix(pmf_base)), fmt, out);
    } else if (*seq) {
      if (seq_tally && emit_values)
        throw validation_error("--tally and --emit-values are mutually exclusive");
      const Radix base = detail::parse_radix(seq_base);
      const SequenceSpec spec = detail::parse_kind(kind, seq_n);
      spec.validate();
      if (emit_values) {
        TermStream stream(spec);
        while (auto t = stream.next())
          out << t->to_decimal() << '\n';
      } else {
        render(detail::sequence_report(kind, spec, base, seq_tally), fmt, out);
      }
    } else if (*t1) {
      render(detail::table1_report(), fmt, out);
    } else if (*t2) {
      if (t2_seq_base < 2 || t2_seq_base > 0xFFFFFFFFULL)
        throw validation_error("--seq-base must be in [2, 2^32-1]");
      render(detail::table2_report(detail::parse_bases(t2_bases), t2_n,
                                   static_cast<std::uint32_t>(t2_seq_base)),
             fmt, out);
    } else if (*an) {
      aopt.base = detail::parse_radix(an_base);
      aopt.source.format = format == "csv" ? DatasetFormat::csv : DatasetFormat::lines;
      if (!column.empty()) {
        if (column.find_first_not_of("0123456789") == std::string::npos)
          aopt.source.column = ColumnSelector(static_cast<std::size_t>(
              detail::parse_unsigned(column, "column index")));
        else
          aopt.source.column = ColumnSelector(column);
      }
      render(detail::analyze_file(aopt), fmt, out);
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == error::kind::io ? exit_io : exit_validation;
  }
  return exit_ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace benford::cli
