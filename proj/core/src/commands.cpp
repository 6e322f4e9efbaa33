#include "ecsc/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "ecsc/csv.hpp"
#include "ecsc/oracle.hpp"
#include "ecsc/perturbation.hpp"
#include "ecsc/report.hpp"
#include "ecsc/wavefunction.hpp"

namespace ecsc::cli {

namespace {

template <class Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsageError;
  } catch (const UnsupportedConfiguration& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUnsupportedState;
  } catch (const PoleError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUnsupportedState;
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsageError;
  } catch (const DegenerateInput& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsageError;
  }
}

std::optional<double> oracle_energy(const PhysicalParams& params, const QuantumNumbers& qn,
                                    const CommonOptions& common, std::ostream& err) {
  auto config = OracleConfig::for_state(params, qn);
  if (common.oracle_points) config.num_points = *common.oracle_points;
  try {
    return solve_eigenvalue(params, qn, config).energy;
  } catch (const NoBoundState& e) {
    fmt::print(err, "warning: {}\n", e.what());
    return std::nullopt;
  }
}

std::string units_comment(const PhysicalParams& p) {
  return fmt::format("hbar={} mass={} A={} delta={} g={}", csv::format_number(p.hbar), csv::format_number(p.mass),
                     csv::format_number(p.strength), csv::format_number(p.screening),
                     csv::format_number(p.cosine_factor));
}

}  // namespace

UnitPreset parse_unit_preset(const std::string& name) {
  if (name == "atomic") return UnitPreset::kAtomic;
  if (name == "table5") return UnitPreset::kTable5;
  if (name == "hbar2m1") return UnitPreset::kHbar2m1;
  if (name == "custom") return UnitPreset::kCustom;
  throw UsageError(fmt::format("unknown unit preset '{}' (atomic, table5, hbar2m1, custom)", name));
}

PhysicalParams resolve_params(const UnitOptions& units, double delta) {
  auto forbid = [](const std::optional<double>& v, const char* flag, const char* preset) {
    if (v) throw UsageError(fmt::format("{} is fixed by --units {}", flag, preset));
  };
  PhysicalParams p;
  switch (units.preset) {
    case UnitPreset::kAtomic:
      forbid(units.hbar, "--hbar", "atomic");
      forbid(units.mass, "--mass", "atomic");
      forbid(units.strength, "--A", "atomic");
      p = PhysicalParams::atomic(delta, units.g);
      break;
    case UnitPreset::kTable5:
      forbid(units.hbar, "--hbar", "table5");
      forbid(units.mass, "--mass", "table5");
      forbid(units.strength, "--A", "table5");
      p = PhysicalParams::sqrt2_coupling(0.0, units.g);
      p.screening = delta;
      break;
    case UnitPreset::kHbar2m1:
      forbid(units.hbar, "--hbar", "hbar2m1");
      forbid(units.mass, "--mass", "hbar2m1");
      p = PhysicalParams::hbar_2m_unit(units.strength.value_or(1.0), delta, units.g);
      break;
    case UnitPreset::kCustom:
      p = PhysicalParams{units.strength.value_or(1.0), delta, units.g, units.hbar.value_or(1.0),
                         units.mass.value_or(1.0)};
      break;
  }
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return p;
}

std::optional<int> oracle_points_from_env() {
  const char* raw = std::getenv("ECSC_ORACLE_POINTS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0 || v > 100'000'000) {
    throw UsageError(fmt::format("ECSC_ORACLE_POINTS must be a positive integer, got '{}'", raw));
  }
  return static_cast<int>(v);
}

int run_energy(const EnergyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto params = resolve_params(options.common.units, options.delta);
    const auto e = total_energy(params, options.qn, options.common.order);
    std::optional<double> oracle;
    if (options.common.oracle.value_or(false)) oracle = oracle_energy(params, options.qn, options.common, err);

    if (options.machine_readable) {
      csv::Document doc;
      doc.header = {"state", "n", "l", "A", "delta", "g", "hbar", "mass", "order",
                    "e0", "shift", "e1", "e2", "total", "e_oracle"};
      doc.rows.push_back({options.qn.label(), std::to_string(options.qn.n), std::to_string(options.qn.l),
                          csv::format_number(params.strength), csv::format_number(params.screening),
                          csv::format_number(params.cosine_factor), csv::format_number(params.hbar),
                          csv::format_number(params.mass), std::to_string(options.common.order),
                          csv::format_number(e.e0), csv::format_number(e.shift), csv::format_number(e.e1),
                          csv::format_number(e.e2), csv::format_number(e.total), csv::format_optional(oracle)});
      doc.write(out);
      return kSuccess;
    }
    fmt::print(out, "state   {} (n={}, l={})\n", options.qn.label(), options.qn.n, options.qn.l);
    fmt::print(out, "units   {}\n", units_comment(params));
    fmt::print(out, "order   {}\n", options.common.order);
    fmt::print(out, "E0      {:>18.10g}\n", e.e0);
    fmt::print(out, "shift   {:>18.10g}\n", e.shift);
    fmt::print(out, "E1      {:>18.10g}\n", e.e1);
    fmt::print(out, "E2      {:>18.10g}\n", e.e2);
    fmt::print(out, "total   {:>18.10g}\n", e.total);
    if (oracle) fmt::print(out, "oracle  {:>18.10g}\n", *oracle);
    return kSuccess;
  });
}

int run_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto id = [&] {
      try {
        return table_id_from_int(options.table);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }();
    ecsc::TableOptions build;
    build.run_oracle = options.common.oracle.value_or(true);
    build.order = options.common.order;
    build.oracle_points = options.common.oracle_points;
    const auto rows = build_table(id, build);
    csv::table_document(rows).write(out);

    const auto s = summarize(id, rows);
    for (const auto& row : rows) {
      if (build.run_oracle && table_uses_oracle(id) && !row.e_oracle) {
        fmt::print(err, "warning: table {} row {} ({}): oracle found no bound state\n", options.table, row.row,
                   row.state_label);
      }
    }
    fmt::print(err, "table {}: {} rows, max |e_pert - e_reference| = {:.3g} (tolerance {:.0e}), {} outside; {}",
               options.table, s.rows, s.max_dev_reference, reference_tolerance(id), s.rows_failing,
               s.passed ? "PASS" : "FAIL");
    if (s.max_dev_oracle) fmt::print(err, "; max |e_pert - e_oracle| = {:.3g}", *s.max_dev_oracle);
    fmt::print(err, "\n");
    return s.passed ? kSuccess : kToleranceFailure;
  });
}

int run_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    csv::Document doc;
    doc.header = {"delta", "e_pert", "e_oracle", "difference", "flag"};
    for (const double delta : options.deltas) {
      const auto params = resolve_params(options.common.units, delta);
      doc.comments = {fmt::format("state={} {}", options.qn.label(), units_comment(params.with_screening(0.0)))};
      const double pert = total_energy(params, options.qn, options.common.order).total;
      const auto oracle = oracle_energy(params, options.qn, options.common, err);
      std::string diff;
      std::string flag;
      if (oracle) {
        const double d = pert - *oracle;
        diff = csv::format_number(d);
        flag = std::abs(d) > options.flag_threshold * std::abs(*oracle) ? "DEVIATES" : "ok";
      } else {
        flag = "no-bound-state";
      }
      doc.rows.push_back({csv::format_number(delta), csv::format_number(pert), csv::format_optional(oracle), diff, flag});
    }
    doc.write(out);
    return kSuccess;
  });
}

int run_wavefunction(const WavefunctionOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(options.delta > 0.0)) throw UsageError("wavefunction needs --delta > 0 (delta = 0 is the Coulomb state)");
    if (options.points < 2 || !(options.r_max > options.r_min) || options.r_min < 0.0) {
      throw UsageError("wavefunction grid needs 0 <= r-min < r-max and at least 2 points");
    }
    const auto params = resolve_params(options.common.units, options.delta);
    const PerturbedGroundState ground(params, options.l);
    const CoulombState coulomb(params, QuantumNumbers{0, options.l});
    const double r_valid = ground.validity_radius();
    if (options.r_min >= r_valid) {
      throw UsageError(fmt::format("grid starts at {} beyond the validity radius {}", options.r_min, r_valid));
    }

    csv::Document doc;
    doc.comments = {fmt::format("r_valid={}", csv::format_number(r_valid)),
                    fmt::format("state={} {}", QuantumNumbers{0, options.l}.label(), units_comment(params))};
    doc.header = {"r", "chi", "u", "psi"};
    int clipped = 0;
    const double h = (options.r_max - options.r_min) / (options.points - 1);
    for (int i = 0; i < options.points; ++i) {
      const double r = options.r_min + i * h;
      if (r >= r_valid) {
        ++clipped;
        continue;
      }
      doc.rows.push_back({csv::format_number(r), csv::format_number(coulomb.chi(r)),
                          csv::format_number(ground.moderating(r)), csv::format_number(ground.psi(r))});
    }
    if (clipped > 0) fmt::print(err, "warning: {} grid points at r >= r_valid = {} were dropped\n", clipped, r_valid);
    doc.write(out);
    return kSuccess;
  });
}

int run_scan(const ScanOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(options.step > 0.0)) throw UsageError("scan needs --step > 0");
    const bool with_oracle = options.common.oracle.value_or(true);
    csv::Document doc;
    doc.header = {"delta", "e0", "shift", "e1", "e2", "total", "e_oracle", "difference"};
    if (options.to >= options.from) {
      const auto count = static_cast<long>(std::floor((options.to - options.from) / options.step + 1e-9)) + 1;
      for (long i = 0; i < count; ++i) {
        const double delta = options.from + static_cast<double>(i) * options.step;
        const auto params = resolve_params(options.common.units, delta);
        const auto e = total_energy(params, options.qn, options.common.order);
        std::optional<double> oracle;
        if (with_oracle) oracle = oracle_energy(params, options.qn, options.common, err);
        doc.rows.push_back({csv::format_number(delta), csv::format_number(e.e0), csv::format_number(e.shift),
                            csv::format_number(e.e1), csv::format_number(e.e2), csv::format_number(e.total),
                            csv::format_optional(oracle),
                            oracle ? csv::format_number(e.total - *oracle) : std::string{}});
      }
    }
    doc.write(out);
    return kSuccess;
  });
}

}  // namespace ecsc::cli
