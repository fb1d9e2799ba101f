#pragma once

// Row/column result tables and their CSV and JSON renderings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace deltacrit::report {

/// An empty cell (monostate) renders as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  /// Throws std::invalid_argument when the row width differs from columns.
  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

/// "csv" | "json"; throws std::invalid_argument.
Format parse_format(const std::string& name);

/// 17 significant digits ("%.17g"); non-finite values give "".
std::string format_number(double value);

/// RFC-4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
std::string csv_field(std::string_view text);

void write_csv(const Table& table, std::ostream& out);
/// {"meta": {...}, "rows": [{column: value, ...}, ...]}; NaN becomes null.
void write_json(const Table& table, std::ostream& out);
void write(const Table& table, Format format, std::ostream& out);

}  // namespace deltacrit::report
