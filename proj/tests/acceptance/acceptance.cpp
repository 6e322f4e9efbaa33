// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ecsc/coulomb.hpp"
#include "ecsc/oracle.hpp"
#include "ecsc/perturbation.hpp"
#include "ecsc/potential.hpp"
#include "ecsc/quadrature.hpp"
#include "ecsc/report.hpp"
#include "ecsc/wavefunction.hpp"

namespace {

using namespace ecsc;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Reference comparison for one or more tables, optionally with a wall-clock limit.
Outcome table_check(const std::vector<TableId>& ids, double time_limit) {
  const auto t0 = Clock::now();
  TableOptions opts;
  opts.run_oracle = false;
  std::size_t rows = 0;
  std::size_t failing = 0;
  double worst = 0.0;
  std::string misses;
  for (const auto id : ids) {
    const auto built = build_table(id, opts);
    const auto s = summarize(id, built);
    rows += s.rows;
    failing += s.rows_failing;
    worst = std::max(worst, s.max_dev_reference);
    for (const auto& r : built) {
      if (r.abs_dev_pert_ref && *r.abs_dev_pert_ref > reference_tolerance(id)) {
        misses += " " + r.state_label + "@" + fmt_g(r.params.screening) + "(" + fmt_g(*r.abs_dev_pert_ref) + ")";
      }
    }
  }
  const double elapsed = seconds_since(t0);
  const bool fast = time_limit <= 0.0 || elapsed < time_limit;
  std::string detail = std::to_string(rows - failing) + "/" + std::to_string(rows) +
                       " rows within tolerance, max |dev| " + fmt_g(worst) + ", " + fmt_g(elapsed) + " s";
  if (!misses.empty()) detail += "; outside:" + misses;
  if (!fast) detail += "; too slow";
  return {failing == 0 && fast, detail};
}

Outcome oracle_check() {
  const auto t0 = Clock::now();
  const auto& ds = ReferenceDataset::builtin();
  std::size_t checked = 0;
  std::size_t failing = 0;
  double worst = 0.0;
  std::string misses;
  for (int table : {1, 2}) {
    for (const auto& e : ds.select(table, "Dynamical[9]")) {
      const auto p = PhysicalParams::atomic(*e.delta);
      const double dev = std::abs(solve_eigenvalue(p, e.qn).energy - e.energy());
      ++checked;
      worst = std::max(worst, dev);
      if (dev > 5e-6) {
        ++failing;
        misses += " " + e.state + "@" + fmt_g(*e.delta) + "(" + fmt_g(dev) + ")";
      }
    }
  }
  double worst_h = 0.0;
  for (const char* label : {"1s", "2s", "2p", "3s", "3p", "3d"}) {
    const auto qn = QuantumNumbers::from_label(label);
    const auto p = PhysicalParams::atomic(0.0);
    worst_h = std::max(worst_h, std::abs(solve_eigenvalue(p, qn).energy - unperturbed_energy(p, qn)));
  }
  const double elapsed = seconds_since(t0);
  const bool pass = failing == 0 && worst_h <= 1e-8 && elapsed < 30.0;
  std::string detail = std::to_string(checked - failing) + "/" + std::to_string(checked) +
                       " dynamical rows within 5e-6 (max " + fmt_g(worst) + "), hydrogen max |dev| " + fmt_g(worst_h) +
                       ", " + fmt_g(elapsed) + " s";
  if (!misses.empty()) detail += "; outside:" + misses;
  return {pass, detail};
}

Outcome quadrature_check() {
  double worst1 = 0.0;
  double worst2 = 0.0;
  for (int l = 0; l <= 2; ++l) {
    for (double delta : {0.02, 0.05, 0.1}) {
      const auto p = PhysicalParams::atomic(delta);
      const CoulombState s(p, {0, l});
      const auto spec = default_quadrature(s);
      const double e1 = e1_quadrature(p, {0, l}, spec);
      worst1 = std::max(worst1, std::abs(e1 - e1_closed(p, {0, l})));
      worst2 = std::max(worst2, std::abs(e2_quadrature(s, e1, spec) - e2_closed(p, {0, l})));
    }
  }
  return {worst1 <= 1e-9 && worst2 <= 1e-9,
          "max |E1 diff| " + fmt_g(worst1) + ", max |E2 diff| " + fmt_g(worst2) + " over 9 states"};
}

Outcome riccati_check() {
  double worst1 = 0.0;
  double worst2 = 0.0;
  const auto p = PhysicalParams::atomic(0.05);
  const double k = p.hbar / std::sqrt(2 * p.mass);
  for (int l = 0; l <= 1; ++l) {
    const QuantumNumbers qn{0, l};
    const double e1 = e1_closed(p, qn);
    const double e2 = e2_closed(p, qn);
    for (double r = 0.1; r <= 20.0 + 1e-12; r += 0.1) {
      const double w0 = ground_superpotential(p, l, r);
      const double w1 = w1_closed(p, qn, r);
      const double w2 = w2_closed(p, l, r);
      const double dw1 = w1_closed_slope(p, qn, r);
      const double dw2 = w2_closed_slope(p, l, r);
      const double dv1 = -p.strength * std::pow(p.screening, 3) / 3 * r * r;
      const double dv2 = p.strength * std::pow(p.screening, 4) / 6 * r * r * r;
      const double s1 = std::max({std::abs(2 * w0 * w1), std::abs(k * dw1), std::abs(dv1), std::abs(e1)});
      const double s2 =
          std::max({std::abs(w1 * w1), std::abs(2 * w0 * w2), std::abs(k * dw2), std::abs(dv2), std::abs(e2)});
      worst1 = std::max(worst1, std::abs(2 * w0 * w1 - k * dw1 - (dv1 - e1)) / s1);
      worst2 = std::max(worst2, std::abs(w1 * w1 + 2 * w0 * w2 - k * dw2 - (dv2 - e2)) / s2);
    }
  }
  return {worst1 <= 1e-6 && worst2 <= 1e-6,
          "max scaled residual first order " + fmt_g(worst1) + ", second order " + fmt_g(worst2)};
}

// exact integer binomials, long double accumulation
long double laguerre_term(int n, int k, int j, double x) {
  long double binom = 1.0L;  // C(n + k, n - j)
  for (int i = 1; i <= n - j; ++i) binom = binom * (k + j + i) / i;
  long double power = 1.0L;
  for (int i = 1; i <= j; ++i) power = power * x / i;
  return (j % 2 == 0 ? 1.0L : -1.0L) * binom * power;
}

Outcome property_check() {
  double worst_norm = 0.0;
  double worst_orth = 0.0;
  const std::vector<PhysicalParams> presets = {PhysicalParams::atomic(0.0), PhysicalParams::sqrt2_coupling(0.0),
                                               PhysicalParams::hbar_2m_unit(4.0, 0.0)};
  for (const auto& p : presets) {
    for (int l = 0; l <= 4; ++l) {
      for (int n = 0; n <= 4; ++n) {
        const CoulombState a(p, {n, l});
        const auto spec = default_quadrature(a);
        const auto q = integrate_adaptive([&](double r) { return a.chi(r) * a.chi(r); }, 0.0, spec.r_max, spec);
        worst_norm = std::max(worst_norm, std::abs(q.value - 1.0));
        for (int m = n + 1; m <= 4; ++m) {
          const CoulombState b(p, {m, l});
          const auto sb = default_quadrature(b);
          const auto o = integrate_adaptive([&](double r) { return a.chi(r) * b.chi(r); }, 0.0, sb.r_max, sb);
          worst_orth = std::max(worst_orth, std::abs(o.value));
        }
      }
    }
  }
  // relative error away from roots (|L| above 1e-3 of the largest term)
  double worst_lag = 0.0;
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 9; ++k) {
      for (double x = 0.0; x <= 50.0; x += 0.25) {
        long double sum = 0.0L;
        double largest = 0.0;
        for (int j = 0; j <= n; ++j) {
          const long double t = laguerre_term(n, k, j, x);
          sum += t;
          largest = std::max(largest, static_cast<double>(std::abs(t)));
        }
        const double ref = static_cast<double>(sum);
        worst_lag = std::max(worst_lag, std::abs(laguerre(n, k, x) - ref) / std::max(std::abs(ref), 1e-3 * largest));
      }
    }
  }
  double worst_hier = 0.0;
  for (int n = 0; n <= 2; ++n) {
    for (int i = 0; i < 20; ++i) {
      const double delta = 0.01 * (i + 1) / 2.0;
      const double r = 0.37 + 1.3 * i;
      const int l = i % 4;
      const auto p = PhysicalParams::atomic(delta);
      const int N = l + 1 + n;
      const double want =
          -(N * std::pow(delta, 3) * r / (3 * std::sqrt(2.0))) * (r + (n == 0 ? (l + 1.0) * (l + 2.0)
                                                                     : n == 1 ? (l + 2.0) * (l + 3.0)
                                                                              : (l + 3.0) * (l + 4.0)));
      worst_hier = std::max(worst_hier, std::abs(w1_closed(p, {n, l}, r) - want) / std::abs(want));
    }
  }
  const auto s = series_coefficients(1.0, 5);
  const double expected[] = {1.0, -1.0, 0.0, 1.0 / 3.0, -1.0 / 6.0, 1.0 / 30.0};
  double worst_series = 0.0;
  for (int i = 0; i <= 5; ++i) worst_series = std::max(worst_series, std::abs(s.values[i] - expected[i]));
  const bool pass = worst_norm <= 1e-10 && worst_orth <= 1e-9 && worst_lag <= 1e-12 && worst_hier <= 1e-13 &&
                    worst_series <= 2.0 * std::numeric_limits<double>::epsilon();
  return {pass, "norm " + fmt_g(worst_norm) + ", orthogonality " + fmt_g(worst_orth) + ", laguerre rel " +
                    fmt_g(worst_lag) + ", hierarchy rel " + fmt_g(worst_hier) + ", series " + fmt_g(worst_series)};
}

Outcome wavefunction_check() {
  const auto p = PhysicalParams::atomic(0.05);
  const PerturbedGroundState g(p, 0);
  const CoulombState chi(p, {0, 0});
  const double r_end = std::min(10.0, g.validity_radius());
  const double ref = g.psi(0.1) / (chi.chi(0.1) * g.moderating(0.1));
  double worst_ratio = 0.0;
  for (double r = 0.1; r <= r_end + 1e-12; r += 0.01) {
    worst_ratio = std::max(worst_ratio, std::abs(g.psi(r) / (chi.chi(r) * g.moderating(r)) / ref - 1.0));
  }
  const double k = std::sqrt(2 * p.mass) / p.hbar;
  double worst_log = 0.0;
  for (double r : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double w = ground_superpotential(p, 0, r) + w1_closed(p, {0, 0}, r) + w2_closed(p, 0, r);
    worst_log = std::max(worst_log, std::abs(g.log_derivative(r) + k * w) / std::max(1.0, k * std::abs(w)));
  }
  return {worst_ratio <= 1e-8 && worst_log <= 1e-8,
          "psi/(chi u) spread " + fmt_g(worst_ratio) + " on [0.1, " + fmt_g(r_end) + "], log-derivative " +
              fmt_g(worst_log) + " at 5 radii"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"table 1 (1s) within 5e-7, < 1 s", [] { return table_check({TableId::T1}, 1.0); }},
      {"table 2 (2s) within 5e-7, < 1 s", [] { return table_check({TableId::T2}, 1.0); }},
      {"tables 3-4 (2s..3d) within 5e-7", [] { return table_check({TableId::T3, TableId::T4}, 0.0); }},
      {"table 5 (binding, delta = G A) within 5e-7", [] { return table_check({TableId::T5}, 0.0); }},
      {"table 6 (hbar = 2m = 1) within 5e-6", [] { return table_check({TableId::T6}, 0.0); }},
      {"Numerov oracle vs dynamical column and hydrogen limit, < 30 s", oracle_check},
      {"closed form vs quadrature corrections within 1e-9", quadrature_check},
      {"first/second order Riccati residuals within 1e-6", riccati_check},
      {"property suites", property_check},
      {"wavefunction identity psi = chi u within 1e-8", wavefunction_check},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
