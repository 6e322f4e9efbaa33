#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecsc/coulomb.hpp"
#include "ecsc/potential.hpp"

namespace ecsc {

// Reference data ----------------------------------------------------------------

/// One published value with its (table, row, column) provenance. The value is
/// kept as the exact printed decimal string; Tables 5 and 6 print binding
/// energies (-E), the others print E.
struct ReferenceEntry {
  int table = 0;
  int row = 0;
  std::string column;
  std::string state;
  QuantumNumbers qn;
  double strength = 0.0;
  std::optional<double> delta;
  std::optional<double> coupling_g;  ///< the G of delta = G A (Table 5 only)
  std::string value_text;

  double value() const;
  /// Energy E regardless of the printed sign convention.
  double energy() const;
  bool is_binding_energy() const { return column == "-E"; }
};

class ReferenceDataset {
 public:
  /// The dataset compiled into the library.
  static const ReferenceDataset& builtin();
  static ReferenceDataset parse(std::string_view csv_text);

  std::span<const ReferenceEntry> entries() const { return entries_; }
  const std::string& raw_text() const { return raw_; }
  /// FNV-1a 64-bit hash of the raw CSV text.
  std::uint64_t checksum() const;

  std::vector<ReferenceEntry> select(int table, std::string_view column) const;
  std::optional<ReferenceEntry> find(int table, std::string_view column, std::string_view state, double delta) const;

 private:
  std::string raw_;
  std::vector<ReferenceEntry> entries_;
};

/// FNV-1a over arbitrary bytes.
std::uint64_t fnv1a64(std::string_view bytes);

// Table reproduction ------------------------------------------------------------

enum class TableId { T1 = 1, T2, T3, T4, T5, T6 };

TableId table_id_from_int(int id);

struct TableRow {
  TableId table = TableId::T1;
  int row = 0;
  std::string state_label;
  PhysicalParams params;
  QuantumNumbers qn;
  double e_pert = 0.0;
  std::optional<double> e_oracle;
  std::optional<double> e_reference;
  std::optional<double> abs_dev_pert_ref;
  std::optional<double> abs_dev_pert_oracle;

  double binding_pert() const { return -e_pert; }
};

/// Acceptance tolerance on |e_pert - e_reference| for each table.
double reference_tolerance(TableId table);

/// Whether the table's rows are also solved by the numerical oracle.
bool table_uses_oracle(TableId table);

struct TableOptions {
  bool run_oracle = true;
  int order = 2;
  std::optional<int> oracle_points;  ///< overrides OracleConfig::num_points
};

/// One row per published E value (or -E for Tables 5-6), in printed order.
std::vector<TableRow> build_table(TableId table, const TableOptions& options = {});

struct TableSummary {
  std::size_t rows = 0;
  double max_dev_reference = 0.0;
  std::optional<double> max_dev_oracle;
  std::size_t rows_failing = 0;
  std::size_t oracle_missing = 0;
  bool passed = true;
};

TableSummary summarize(TableId table, std::span<const TableRow> rows);

}  // namespace ecsc
