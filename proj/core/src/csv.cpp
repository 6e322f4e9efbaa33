#include "ecsc/csv.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <fmt/core.h>

#include "ecsc/errors.hpp"

namespace ecsc::csv {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

}  // namespace

std::string Document::to_string() const {
  std::string out;
  for (const auto& c : comments) out += "# " + c + '\n';
  out += join(header) + '\n';
  for (const auto& r : rows) out += join(r) + '\n';
  return out;
}

void Document::write(std::ostream& out) const { out << to_string(); }

Document Document::parse(std::string_view text) {
  Document doc;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      doc.comments.emplace_back(line);
      continue;
    }
    auto fields = split(line);
    if (!have_header) {
      doc.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != doc.header.size()) {
      throw DomainError(fmt::format("CSV row has {} fields, header has {}", fields.size(), doc.header.size()));
    }
    doc.rows.push_back(std::move(fields));
  }
  return doc;
}

std::string format_number(double value) { return fmt::format("{:.10g}", value); }

std::string format_optional(const std::optional<double>& value) { return value ? format_number(*value) : std::string{}; }

double parse_number(std::string_view field) {
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw DomainError(fmt::format("not a number: '{}'", field));
  return value;
}

std::optional<double> parse_optional(std::string_view field) {
  if (field.empty()) return std::nullopt;
  return parse_number(field);
}

const std::vector<std::string>& table_header() {
  static const std::vector<std::string> header{
      "table",  "row",    "state", "n",      "l",           "A",           "delta",
      "g",      "hbar",   "mass",  "e_pert", "binding_pert", "e_oracle",  "e_reference",
      "abs_dev_pert_ref", "abs_dev_pert_oracle"};
  return header;
}

std::vector<std::string> to_record(const TableRow& row) {
  return {std::to_string(static_cast<int>(row.table)),
          std::to_string(row.row),
          row.state_label,
          std::to_string(row.qn.n),
          std::to_string(row.qn.l),
          format_number(row.params.strength),
          format_number(row.params.screening),
          format_number(row.params.cosine_factor),
          format_number(row.params.hbar),
          format_number(row.params.mass),
          format_number(row.e_pert),
          format_number(row.binding_pert()),
          format_optional(row.e_oracle),
          format_optional(row.e_reference),
          format_optional(row.abs_dev_pert_ref),
          format_optional(row.abs_dev_pert_oracle)};
}

TableRow from_record(std::span<const std::string> record) {
  if (record.size() != table_header().size()) {
    throw DomainError(fmt::format("table record needs {} fields, got {}", table_header().size(), record.size()));
  }
  TableRow row;
  row.table = table_id_from_int(static_cast<int>(parse_number(record[0])));
  row.row = static_cast<int>(parse_number(record[1]));
  row.state_label = record[2];
  row.qn = QuantumNumbers{static_cast<int>(parse_number(record[3])), static_cast<int>(parse_number(record[4]))};
  row.params = PhysicalParams{parse_number(record[5]), parse_number(record[6]), parse_number(record[7]),
                              parse_number(record[8]), parse_number(record[9])};
  row.e_pert = parse_number(record[10]);
  row.e_oracle = parse_optional(record[12]);
  row.e_reference = parse_optional(record[13]);
  row.abs_dev_pert_ref = parse_optional(record[14]);
  row.abs_dev_pert_oracle = parse_optional(record[15]);
  return row;
}

Document table_document(std::span<const TableRow> rows) {
  Document doc;
  doc.header = table_header();
  for (const auto& r : rows) doc.rows.push_back(to_record(r));
  return doc;
}

std::vector<TableRow> table_rows(const Document& doc) {
  if (doc.header != table_header()) throw DomainError("not a table CSV (header mismatch)");
  std::vector<TableRow> rows;
  for (const auto& rec : doc.rows) rows.push_back(from_record(rec));
  return rows;
}

}  // namespace ecsc::csv
