#include "ecsc/report.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include <fmt/core.h>

#include "ecsc/csv.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/oracle.hpp"
#include "ecsc/perturbation.hpp"

namespace ecsc {

namespace detail {
extern const std::string_view kReferenceCsv;
}

namespace {

int parse_int(std::string_view field) {
  const double v = csv::parse_number(field);
  if (v != std::floor(v)) throw DomainError(fmt::format("expected an integer, got '{}'", field));
  return static_cast<int>(v);
}

std::string_view reference_column(TableId table) {
  return (table == TableId::T5 || table == TableId::T6) ? "-E" : "E_nl";
}

PhysicalParams params_for(TableId table, const ReferenceEntry& entry) {
  switch (table) {
    case TableId::T1:
    case TableId::T2:
    case TableId::T3:
    case TableId::T4:
      return PhysicalParams::atomic(entry.delta.value());
    case TableId::T5:
      return PhysicalParams::sqrt2_coupling(entry.coupling_g.value());
    case TableId::T6:
      return PhysicalParams::hbar_2m_unit(entry.strength, entry.delta.value());
  }
  throw DomainError("unknown table");
}

}  // namespace

double ReferenceEntry::value() const { return csv::parse_number(value_text); }

double ReferenceEntry::energy() const { return is_binding_energy() ? -value() : value(); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

const ReferenceDataset& ReferenceDataset::builtin() {
  static const ReferenceDataset dataset = parse(detail::kReferenceCsv);
  return dataset;
}

ReferenceDataset ReferenceDataset::parse(std::string_view csv_text) {
  ReferenceDataset out;
  out.raw_ = std::string(csv_text);
  const auto doc = csv::Document::parse(csv_text);
  const std::vector<std::string> expected{"table", "row", "column", "state", "n", "l", "A", "delta", "G", "value"};
  if (doc.header != expected) throw DomainError("reference dataset has an unexpected header");
  for (const auto& rec : doc.rows) {
    ReferenceEntry e;
    e.table = parse_int(rec[0]);
    e.row = parse_int(rec[1]);
    e.column = rec[2];
    e.state = rec[3];
    e.qn = QuantumNumbers{parse_int(rec[4]), parse_int(rec[5])};
    e.strength = csv::parse_number(rec[6]);
    e.delta = csv::parse_optional(rec[7]);
    e.coupling_g = csv::parse_optional(rec[8]);
    e.value_text = rec[9];
    if (QuantumNumbers::from_label(e.state) != e.qn) {
      throw DomainError(fmt::format("reference row {}/{}: label {} disagrees with (n, l)", e.table, e.row, e.state));
    }
    out.entries_.push_back(std::move(e));
  }
  return out;
}

std::uint64_t ReferenceDataset::checksum() const { return fnv1a64(raw_); }

std::vector<ReferenceEntry> ReferenceDataset::select(int table, std::string_view column) const {
  std::vector<ReferenceEntry> out;
  std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(out),
               [&](const ReferenceEntry& e) { return e.table == table && e.column == column; });
  return out;
}

std::optional<ReferenceEntry> ReferenceDataset::find(int table, std::string_view column, std::string_view state,
                                                     double delta) const {
  for (const auto& e : entries_) {
    const double key = e.delta.value_or(e.coupling_g.value_or(NAN));
    if (e.table == table && e.column == column && e.state == state && std::abs(key - delta) < 1e-12) return e;
  }
  return std::nullopt;
}

TableId table_id_from_int(int id) {
  if (id < 1 || id > 6) throw DomainError(fmt::format("table id must be 1..6, got {}", id));
  return static_cast<TableId>(id);
}

double reference_tolerance(TableId table) { return table == TableId::T6 ? 5e-6 : 5e-7; }

bool table_uses_oracle(TableId table) {
  return table == TableId::T1 || table == TableId::T2 || table == TableId::T3 || table == TableId::T4;
}

std::vector<TableRow> build_table(TableId table, const TableOptions& options) {
  const auto entries = ReferenceDataset::builtin().select(static_cast<int>(table), reference_column(table));
  std::vector<TableRow> rows;
  rows.reserve(entries.size());
  for (const auto& entry : entries) {
    TableRow row;
    row.table = table;
    row.row = entry.row;
    row.state_label = entry.state;
    row.params = params_for(table, entry);
    row.qn = entry.qn;
    row.e_pert = total_energy(row.params, row.qn, options.order).total;
    row.e_reference = entry.energy();
    row.abs_dev_pert_ref = std::abs(row.e_pert - *row.e_reference);
    rows.push_back(std::move(row));
  }

  if (options.run_oracle && table_uses_oracle(table)) {
    // Each solve owns its grid, so rows can be solved concurrently and merged
    // back in table order.
    std::vector<std::future<std::optional<double>>> pending;
    pending.reserve(rows.size());
    for (const auto& row : rows) {
      pending.push_back(std::async(std::launch::async, [&row, &options]() -> std::optional<double> {
        auto config = OracleConfig::for_state(row.params, row.qn);
        if (options.oracle_points) config.num_points = *options.oracle_points;
        try {
          return solve_eigenvalue(row.params, row.qn, config).energy;
        } catch (const NoBoundState&) {
          return std::nullopt;
        }
      }));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].e_oracle = pending[i].get();
      if (rows[i].e_oracle) rows[i].abs_dev_pert_oracle = std::abs(rows[i].e_pert - *rows[i].e_oracle);
    }
  }
  return rows;
}

TableSummary summarize(TableId table, std::span<const TableRow> rows) {
  TableSummary s;
  s.rows = rows.size();
  const double tol = reference_tolerance(table);
  for (const auto& row : rows) {
    if (row.abs_dev_pert_ref) {
      s.max_dev_reference = std::max(s.max_dev_reference, *row.abs_dev_pert_ref);
      if (*row.abs_dev_pert_ref > tol) ++s.rows_failing;
    }
    if (row.abs_dev_pert_oracle) {
      s.max_dev_oracle = std::max(s.max_dev_oracle.value_or(0.0), *row.abs_dev_pert_oracle);
    } else if (table_uses_oracle(table) && !row.e_oracle) {
      ++s.oracle_missing;
    }
  }
  s.passed = s.rows_failing == 0;
  return s;
}

}  // namespace ecsc
