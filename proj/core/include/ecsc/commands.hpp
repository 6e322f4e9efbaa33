#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ecsc/coulomb.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/potential.hpp"

namespace ecsc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kToleranceFailure = 1,
  kUsageError = 2,
  kUnsupportedState = 3,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class UnitPreset { kAtomic, kTable5, kHbar2m1, kCustom };

UnitPreset parse_unit_preset(const std::string& name);

struct UnitOptions {
  UnitPreset preset = UnitPreset::kAtomic;
  std::optional<double> hbar;
  std::optional<double> mass;
  std::optional<double> strength;
  double g = 1.0;
};

/// Resolves a preset plus overrides into validated parameters. Presets fix
/// their own constants (atomic: hbar = m = A = 1; table5: hbar = m = 1,
/// A = sqrt 2; hbar2m1: hbar = 1, m = 1/2, A free); overriding a fixed
/// constant is a UsageError.
PhysicalParams resolve_params(const UnitOptions& units, double delta);

struct CommonOptions {
  UnitOptions units;
  int order = 2;
  std::optional<bool> oracle;       ///< unset: per-command default
  std::optional<int> oracle_points;  ///< grid override (ECSC_ORACLE_POINTS)
};

/// Reads ECSC_ORACLE_POINTS; throws UsageError when it is set but not a positive integer.
std::optional<int> oracle_points_from_env();

struct EnergyOptions {
  CommonOptions common;
  double delta = 0.0;
  QuantumNumbers qn;
  bool machine_readable = false;
};

struct TableOptions {
  CommonOptions common;
  int table = 1;
};

struct CompareOptions {
  CommonOptions common;
  QuantumNumbers qn;
  std::vector<double> deltas;
  /// Rows with |e_pert - e_oracle| > threshold * |e_oracle| are flagged.
  double flag_threshold = 1e-3;
};

struct WavefunctionOptions {
  CommonOptions common;
  int l = 0;
  double delta = 0.0;
  double r_min = 0.0;
  double r_max = 10.0;
  int points = 101;
};

struct ScanOptions {
  CommonOptions common;
  QuantumNumbers qn;
  double from = 0.0;
  double to = 0.1;
  double step = 0.01;
};

// Each command writes its primary output to `out`, diagnostics to `err`, and
// returns an ExitCode. Library errors are mapped onto exit codes here.
int run_energy(const EnergyOptions& options, std::ostream& out, std::ostream& err);
int run_table(const TableOptions& options, std::ostream& out, std::ostream& err);
int run_compare(const CompareOptions& options, std::ostream& out, std::ostream& err);
int run_wavefunction(const WavefunctionOptions& options, std::ostream& out, std::ostream& err);
int run_scan(const ScanOptions& options, std::ostream& out, std::ostream& err);

}  // namespace ecsc::cli
