#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecsc/report.hpp"

namespace ecsc::csv {

/// Header plus rows of raw fields. Comma separated, '.' decimal point, LF line
/// endings; lines starting with '#' are comments and are skipped when parsing.
/// Fields never contain commas or quotes in this project, so no quoting.
struct Document {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
  void write(std::ostream& out) const;
  static Document parse(std::string_view text);

  friend bool operator==(const Document&, const Document&) = default;
};

/// 10 significant digits, shortest form ("%.10g").
std::string format_number(double value);
std::string format_optional(const std::optional<double>& value);
std::optional<double> parse_optional(std::string_view field);
double parse_number(std::string_view field);

const std::vector<std::string>& table_header();
std::vector<std::string> to_record(const TableRow& row);
TableRow from_record(std::span<const std::string> record);

Document table_document(std::span<const TableRow> rows);
std::vector<TableRow> table_rows(const Document& doc);

}  // namespace ecsc::csv
