#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ecsc/commands.hpp"

namespace {

using namespace ecsc::cli;

struct Globals {
  std::string units = "atomic";
  std::optional<double> hbar;
  std::optional<double> mass;
  std::optional<double> strength;
  double g = 1.0;
  int order = 2;
  std::string out;
  bool oracle = false;
  bool no_oracle = false;
};

// --G is the table5 coupling; delta = G * A there.
double pick_delta(const Globals& glob, const std::optional<double>& delta, const std::optional<double>& coupling) {
  if (delta && coupling) throw UsageError("give either --delta or --G, not both");
  if (coupling) {
    if (glob.units != "table5") throw UsageError("--G is only meaningful with --units table5");
    return *coupling * std::sqrt(2.0);
  }
  if (!delta) throw UsageError("--delta (or --G with --units table5) is required");
  return *delta;
}

ecsc::QuantumNumbers pick_state(const std::string& label) {
  try {
    return ecsc::QuantumNumbers::from_label(label);
  } catch (const ecsc::Error& e) {
    throw UsageError(e.what());
  }
}

CommonOptions common_from(const Globals& glob) {
  CommonOptions c;
  c.units.preset = parse_unit_preset(glob.units);
  c.units.hbar = glob.hbar;
  c.units.mass = glob.mass;
  c.units.strength = glob.strength;
  c.units.g = glob.g;
  c.order = glob.order;
  if (glob.oracle && glob.no_oracle) throw UsageError("--oracle and --no-oracle are exclusive");
  if (glob.oracle) c.oracle = true;
  if (glob.no_oracle) c.oracle = false;
  c.oracle_points = oracle_points_from_env();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energies and wavefunctions of the exponential-cosine-screened Coulomb potential"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", "ecsc 0.1.0");

  Globals glob;
  app.add_option("--units", glob.units, "unit preset: atomic | table5 | hbar2m1 | custom")
      ->check(CLI::IsMember({"atomic", "table5", "hbar2m1", "custom"}));
  app.add_option("--hbar", glob.hbar, "reduced Planck constant (custom units)");
  app.add_option("--mass", glob.mass, "particle mass (custom units)");
  app.add_option("--A", glob.strength, "potential strength");
  app.add_option("--g", glob.g, "cosine factor (only 1 is supported by the perturbation series)");
  app.add_option("--order", glob.order, "perturbation order")->check(CLI::Range(0, 2));
  app.add_option("--out", glob.out, "write primary output to this file instead of stdout");
  app.add_flag("--oracle", glob.oracle, "also run the Numerov oracle");
  app.add_flag("--no-oracle", glob.no_oracle, "skip the Numerov oracle");

  std::optional<double> delta;
  std::optional<double> coupling;
  std::string state = "1s";

  auto* energy = app.add_subcommand("energy", "perturbative energy of one state");
  energy->add_option("--delta", delta, "screening parameter");
  energy->add_option("--G", coupling, "table5 coupling, delta = G*A");
  energy->add_option("--state", state, "state label, e.g. 1s, 2p, 3d");
  bool energy_csv = false;
  energy->add_flag("--csv", energy_csv, "machine-readable CSV record");

  auto* table = app.add_subcommand("table", "reproduce one reference table as CSV");
  int table_number = 1;
  table->add_option("number", table_number, "table number 1..6")->required();

  auto* compare = app.add_subcommand("compare", "perturbation vs Numerov oracle over several deltas");
  std::vector<double> compare_deltas;
  double flag_threshold = 1e-3;
  compare->add_option("--state", state, "state label");
  compare->add_option("--deltas", compare_deltas, "screening values")->required()->delimiter(',');
  compare->add_option("--flag", flag_threshold, "relative deviation that gets flagged");

  auto* wave = app.add_subcommand("wavefunction", "perturbed nodeless wavefunction on a grid");
  WavefunctionOptions wave_opts;
  wave->add_option("--l", wave_opts.l, "angular momentum")->check(CLI::NonNegativeNumber);
  wave->add_option("--delta", delta, "screening parameter");
  wave->add_option("--G", coupling, "table5 coupling, delta = G*A");
  wave->add_option("--r-min", wave_opts.r_min, "first grid point");
  wave->add_option("--r-max", wave_opts.r_max, "last grid point");
  wave->add_option("--points", wave_opts.points, "number of grid points");

  auto* scan = app.add_subcommand("scan", "energy over a range of deltas");
  ScanOptions scan_opts;
  scan->add_option("--state", state, "state label");
  scan->add_option("--from", scan_opts.from, "first delta");
  scan->add_option("--to", scan_opts.to, "last delta (inclusive)");
  scan->add_option("--step", scan_opts.step, "delta increment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!glob.out.empty()) {
    file.open(glob.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << glob.out << " for writing\n";
      return kUsageError;
    }
    out = &file;
  }

  try {
    const CommonOptions common = common_from(glob);
    if (energy->parsed()) {
      EnergyOptions o;
      o.common = common;
      o.delta = pick_delta(glob, delta, coupling);
      o.qn = pick_state(state);
      o.machine_readable = energy_csv;
      return run_energy(o, *out, std::cerr);
    }
    if (table->parsed()) {
      TableOptions o;
      o.common = common;
      o.table = table_number;
      return run_table(o, *out, std::cerr);
    }
    if (compare->parsed()) {
      CompareOptions o;
      o.common = common;
      o.qn = pick_state(state);
      o.deltas = compare_deltas;
      o.flag_threshold = flag_threshold;
      return run_compare(o, *out, std::cerr);
    }
    if (wave->parsed()) {
      wave_opts.common = common;
      wave_opts.delta = pick_delta(glob, delta, coupling);
      return run_wavefunction(wave_opts, *out, std::cerr);
    }
    if (scan->parsed()) {
      scan_opts.common = common;
      scan_opts.qn = pick_state(state);
      return run_scan(scan_opts, *out, std::cerr);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
