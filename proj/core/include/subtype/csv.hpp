#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace subtype {

/// Splits one CSV line on commas. Fields in this project never contain
/// commas or quotes; a trailing '\r' is stripped.
std::vector<std::string> split_csv_line(const std::string& line);

/// Header-checked row reader. Throws std::runtime_error if the stream is
/// empty or the header row does not match `header` exactly.
class CsvReader {
 public:
  CsvReader(std::istream& in, const std::vector<std::string>& header,
            std::string stream_name);

  /// Reads the next non-empty row. Returns false at end of stream.
  bool next(std::vector<std::string>& fields);

  /// 1-based line number of the row last returned by next().
  std::size_t line() const { return line_; }
  const std::string& name() const { return name_; }
  std::size_t columns() const { return n_cols_; }

 private:
  std::istream& in_;
  std::string name_;
  std::size_t n_cols_;
  std::size_t line_ = 1;
};

// Shortest representation that parses back to the same double.
std::string format_double(double v);
std::string format_fixed(double v, int precision);

std::optional<double> parse_double(const std::string& s);
std::optional<long long> parse_int(const std::string& s);

// ISO-8601 UTC timestamps, e.g. "2020-03-01T13:45:00Z" <-> Unix seconds.
std::optional<std::int64_t> parse_iso8601_utc(const std::string& s);
std::string format_iso8601_utc(std::int64_t unix_seconds);

}  // namespace subtype
