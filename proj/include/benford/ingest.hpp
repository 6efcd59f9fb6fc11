#pragma once

// Reads numerals out of CSV columns or plain one-per-line text. Tokens are
// handed on verbatim (trimmed of surrounding whitespace only); nothing goes
// through a binary floating-point parse.

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "leading_digit.hpp"

namespace benford {

enum class DatasetFormat { csv, lines };

using ColumnSelector = std::variant<std::string, std::size_t>;

struct DatasetSource {
  DatasetFormat format = DatasetFormat::lines;
  std::optional<ColumnSelector> column;
  bool skip_header = false;

  void validate() const {
    if (format == DatasetFormat::csv && !column)
      throw validation_error("csv input needs a column (name or 0-based index)");
    if (format == DatasetFormat::lines && column)
      throw validation_error("a column selector only applies to csv input");
  }
};

struct IngestStats {
  std::uint64_t records = 0;
  std::uint64_t numerals = 0;
  std::uint64_t skipped_blank = 0;
  std::uint64_t skipped_non_numeric = 0;

  std::uint64_t skipped() const noexcept { return skipped_blank + skipped_non_numeric; }

  std::vector<std::string> warnings() const {
    std::vector<std::string> w;
    if (skipped_non_numeric > 0)
      w.push_back("skipped " + std::to_string(skipped_non_numeric) + " non-numeric token(s)");
    if (skipped_blank > 0)
      w.push_back("skipped " + std::to_string(skipped_blank) + " blank field(s)");
    return w;
  }
};

namespace ingest_detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline void strip_bom(std::string& line) {
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF)
    line.erase(0, 3);
}

inline void check_stream(const std::istream& in) {
  if (in.bad())
    throw error(error::kind::io, "I/O error while reading input");
}

// Reads one RFC 4180 record. Quoted fields may contain commas, doubled quotes
// and newlines. Returns false at end of input.
inline bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                            std::uint64_t& line_no, bool first) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) {
    check_stream(in);
    return false;
  }
  ++line_no;
  if (first)
    strip_bom(line);
  const std::uint64_t start_line = line_no;

  std::string field;
  bool in_quotes = false;
  bool was_quoted = false;
  std::size_t i = 0;
  for (;;) {
    if (i == line.size()) {
      if (in_quotes) {
        field.push_back('\n');
        if (!std::getline(in, line)) {
          check_stream(in);
          throw error(error::kind::parse, "malformed csv: unterminated quoted field starting on line " +
                                              std::to_string(start_line));
        }
        ++line_no;
        i = 0;
        continue;
      }
      break;
    }
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (c == '"') {
      if (was_quoted || !trim(field).empty())
        throw error(error::kind::parse, "malformed csv: stray quote on line " + std::to_string(line_no));
      field.clear();
      in_quotes = true;
      was_quoted = true;
    } else if (was_quoted) {
      if (c != ' ' && c != '\t' && c != '\r')
        throw error(error::kind::parse, "malformed csv: text after closing quote on line " +
                                            std::to_string(line_no));
    } else {
      field.push_back(c);
    }
    ++i;
  }
  fields.push_back(std::move(field));
  return true;
}

} // namespace ingest_detail

// Streams every numeral token to `sink`. Blank and non-numeric tokens are
// counted in the returned stats instead of failing the run.
inline IngestStats ingest(const DatasetSource& source, std::istream& in,
                          const std::function<void(std::string_view)>& sink) {
  source.validate();
  IngestStats stats;
  auto consider = [&](std::string_view raw) {
    ++stats.records;
    std::string_view tok = ingest_detail::trim(raw);
    if (tok.empty()) {
      ++stats.skipped_blank;
      return;
    }
    if (!parse_decimal_numeral(tok)) {
      ++stats.skipped_non_numeric;
      return;
    }
    ++stats.numerals;
    sink(tok);
  };

  if (source.format == DatasetFormat::lines) {
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (first) {
        ingest_detail::strip_bom(line);
        first = false;
        if (source.skip_header)
          continue;
      }
      consider(line);
    }
    ingest_detail::check_stream(in);
    return stats;
  }

  std::vector<std::string> fields;
  std::uint64_t line_no = 0;
  std::size_t column = 0;
  bool first = true;
  if (const auto* name = std::get_if<std::string>(&*source.column)) {
    if (!ingest_detail::read_csv_record(in, fields, line_no, true))
      throw error(error::kind::parse, "csv input is empty; expected a header row");
    first = false;
    bool found = false;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (ingest_detail::trim(fields[i]) == *name) {
        column = i;
        found = true;
        break;
      }
    }
    if (!found)
      throw validation_error("csv header has no column named '" + *name + "'");
  } else {
    column = std::get<std::size_t>(*source.column);
    if (source.skip_header) {
      if (!ingest_detail::read_csv_record(in, fields, line_no, true))
        return stats;
      first = false;
    }
  }

  while (ingest_detail::read_csv_record(in, fields, line_no, first)) {
    first = false;
    if (fields.size() == 1 && ingest_detail::trim(fields[0]).empty())
      continue; // empty line
    consider(column < fields.size() ? std::string_view(fields[column]) : std::string_view{});
  }
  return stats;
}

struct IngestResult {
  std::vector<std::string> numerals;
  IngestStats stats;
};

inline IngestResult ingest_all(const DatasetSource& source, std::istream& in) {
  IngestResult r;
  r.stats = ingest(source, in, [&](std::string_view tok) { r.numerals.emplace_back(tok); });
  return r;
}

} // namespace benford
