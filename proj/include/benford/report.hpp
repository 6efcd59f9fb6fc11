#pragma once

// Report documents produced by the command-line tool, and their three
// renderings: aligned text, JSON and CSV.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "fit.hpp"
#include "histogram.hpp"
#include "radix.hpp"
#include "table2.hpp"

namespace benford {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { text, json, csv };

// Reals in JSON carry 6 significant digits.
inline double round_significant(double v, int digits = 6) {
  if (!std::isfinite(v))
    throw validation_error("non-finite value in report");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline ordered_json radix_json(Radix r) {
  if (r.is_infinite())
    return "inf";
  return r.value();
}

inline ordered_json histogram_json(const DigitHistogram& h) {
  ordered_json counts = ordered_json::array();
  const double n = static_cast<double>(h.total());
  for (std::uint32_t d = 1; d <= h.counts().size(); ++d) {
    const auto c = h.count(d);
    counts.push_back({{"digit", d},
                      {"count", c},
                      {"frequency", h.total() == 0 ? 0.0 : round_significant(static_cast<double>(c) / n)}});
  }
  return {{"total", h.total()}, {"counts", std::move(counts)}};
}

inline ordered_json fit_json(const FitReport& f) {
  return {{"chi2", round_significant(f.statistic_chi2)},
          {"degrees_of_freedom", f.degrees_of_freedom},
          {"p_value", round_significant(f.p_value)},
          {"mad", round_significant(f.mad)},
          {"max_deviation", round_significant(f.max_deviation)},
          {"verdict", to_string(f.verdict)},
          {"small_expected_cells", f.small_expected_cells}};
}

inline ordered_json table2_row_json(const Table2Row& r) {
  return {{"base", radix_json(r.base)},
          {"sample_size", r.sample_size},
          {"empirical_p1", round_significant(r.empirical_p1)},
          {"asymptotic_p1", round_significant(r.asymptotic_p1)},
          {"published_p1", r.published_p1 ? ordered_json(round_significant(*r.published_p1)) : ordered_json(nullptr)}};
}

// A renderer-agnostic result: JSON payload plus a flat table for text/CSV.
struct ReportDocument {
  std::string mode;
  ordered_json base;          // number, "inf", or an array for multi-base modes
  std::string base_key = "base";
  std::vector<std::pair<std::string, ordered_json>> payload;
  std::vector<std::string> warnings;

  // Flat table for text and CSV output.
  std::vector<std::string> preamble; // text lines printed before the table
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes; // extra lines printed after the text table
  bool table_in_text = true;

  ordered_json to_json() const {
    ordered_json j;
    j["mode"] = mode;
    j[base_key] = base;
    for (const auto& [k, v] : payload)
      j[k] = v;
    j["warnings"] = warnings;
    return j;
  }
};

inline void render_text(const ReportDocument& doc, std::ostream& out) {
  std::vector<std::size_t> width(doc.columns.size(), 0);
  for (std::size_t c = 0; c < doc.columns.size(); ++c)
    width[c] = doc.columns[c].size();
  for (const auto& row : doc.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  for (const auto& p : doc.preamble)
    out << p << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != 0)
        s += "  ";
      s += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    out << s << '\n';
  };
  if (doc.table_in_text && !doc.columns.empty()) {
    line(doc.columns);
    for (const auto& row : doc.rows)
      line(row);
  }
  for (const auto& n : doc.notes)
    out << n << '\n';
  for (const auto& w : doc.warnings)
    out << "warning: " << w << '\n';
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"')
      r += '"';
    r += c;
  }
  return r + "\"";
}

inline void render_csv(const ReportDocument& doc, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      out << (c ? "," : "") << csv_escape(cells[c]);
    out << '\n';
  };
  line(doc.columns);
  for (const auto& row : doc.rows)
    line(row);
}

inline void render(const ReportDocument& doc, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
  case OutputFormat::text: render_text(doc, out); break;
  case OutputFormat::json: out << doc.to_json().dump(2) << '\n'; break;
  case OutputFormat::csv: render_csv(doc, out); break;
  }
}

} // namespace benford
