#include "ecsc/perturbation.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include <fmt/core.h>

#include "ecsc/errors.hpp"

namespace ecsc {

namespace {

void require_cosine_screening(const PhysicalParams& params, const char* what) {
  params.validate();
  if (params.cosine_factor != 1.0) {
    throw UnsupportedConfiguration(
        fmt::format("{} is derived for g = 1 (got g = {})", what, params.cosine_factor));
  }
}

void require_closed_form_range(const QuantumNumbers& qn, const char* what) {
  qn.validate();
  if (qn.n > 2) {
    throw OutOfRange(fmt::format("{} is available for n <= 2 only (got n = {}); use e1_general or the oracle",
                                 what, qn.n));
  }
}

double kinetic_scale(const PhysicalParams& p) { return p.hbar / std::sqrt(2.0 * p.mass); }

// <r^2> of a hydrogenic state.
double coulomb_r2_moment(const PhysicalParams& p, const QuantumNumbers& qn) {
  const double a0 = p.bohr_radius();
  const double N = qn.principal();
  const double l = qn.l;
  return a0 * a0 * N * N * (5.0 * N * N + 1.0 - 3.0 * l * (l + 1.0)) / 2.0;
}

struct AbcCoefficients {
  double a, b, c;
};

AbcCoefficients abc(const PhysicalParams& p, int l) {
  const double hbar2 = p.hbar * p.hbar;
  const double A = p.strength;
  const double m = p.mass;
  const double d2 = p.screening * p.screening;
  const double L = l + 1.0;
  const double a = hbar2 * L * (3.0 * l + 7.0) * d2 / (A * m) - 3.0 * A * m / (hbar2 * L * L);
  const double b = hbar2 * hbar2 * L * L * (8.0 * l * l + 37.0 * l + 43.0) * d2 / (2.0 * A * A * m * m) -
                   1.5 * (2.0 * l + 5.0) / L;
  const double c = hbar2 * L * L * L / (9.0 * A * m);
  return {a, b, c};
}

// chi^2 is never exactly zero away from r = 0 and the nodes; treat it as a pole
// once it underflows relative to the state's scale.
void require_off_node(const CoulombState& state, double r, double chi) {
  const double scale = state.norm() * std::pow(state.params().bohr_radius(), state.quantum_numbers().l + 1);
  if (std::abs(chi) <= 1e-150 * scale) {
    throw PoleError(fmt::format("chi({}) underflows for {}", r, state.quantum_numbers().label()));
  }
  const int n = state.quantum_numbers().n;
  if (n == 0) return;
  const double x = 2.0 * state.beta() * r;
  const int k = 2 * state.quantum_numbers().l + 1;
  const double lag = laguerre(n, k, x);
  const double slope = -laguerre(n - 1, k + 1, x);
  if (std::abs(lag) <= 1e-9 * std::abs(x * slope)) {
    throw PoleError(fmt::format("r = {} is at a node of {}", r, state.quantum_numbers().label()));
  }
}

// Peak of r^{2N} exp(-2 beta r), i.e. of chi^2 for node-free states.
double density_peak(const CoulombState& state) {
  return state.quantum_numbers().principal() / state.beta();
}

// int_0^r f, given total = int_0^inf f. Past the density peak the lower
// integral suffers cancellation once chi(r) is small, so the upper tail is
// integrated instead. A total at rounding level (relative to `scale`) is noise,
// and dividing it by a tiny chi^2 would swamp the result; a genuine one
// (inconsistent energy) is kept.
double integral_from_origin(const CoulombState& state, const std::function<double(double)>& f, double total,
                            double scale, double r, double chi_sq, const QuadratureSpec& spec) {
  const double tol = spec.tolerance * std::max(chi_sq, std::numeric_limits<double>::min());
  if (r <= density_peak(state)) return integrate_adaptive(f, 0.0, r, tol, spec.max_subdivisions).value;
  if (std::abs(total) <= 1e-12 * std::abs(scale)) total = 0.0;
  // the tail must reach well past r, not stop at the density cutoff
  const double tail_end = std::max(spec.r_max, r + 30.0 / state.beta());
  return total - integrate_adaptive(f, r, tail_end, tol, spec.max_subdivisions).value;
}

}  // namespace

QuadratureSpec default_quadrature(const CoulombState& state) {
  const double beta = state.beta();
  const int N = state.quantum_numbers().principal();
  // log of r^{2N + 8} e^{-2 beta r}; the extra r^8 covers the W1^2 weight.
  const double power = 2.0 * N + 8.0;
  auto log_weight = [&](double r) { return power * std::log(r) - 2.0 * beta * r; };
  const double peak = power / (2.0 * beta);
  const double floor = log_weight(peak) + std::log(1e-18);
  double r = peak;
  while (log_weight(r) > floor) r *= 1.05;
  QuadratureSpec spec;
  spec.r_max = r;
  return spec;
}

double e1_closed(const PhysicalParams& params, const QuantumNumbers& qn) {
  require_cosine_screening(params, "e1_closed");
  require_closed_form_range(qn, "e1_closed");
  const double l = qn.l;
  double factor = 0.0;
  switch (qn.n) {
    case 0: factor = (l + 1) * (l + 1) * (l + 2) * (2 * l + 3); break;
    case 1: factor = (l + 2) * (l + 2) * (l + 7) * (2 * l + 3); break;
    case 2: factor = (l + 3) * (l + 3) * (l + 2) * (2 * l + 23); break;
  }
  const double hbar4 = std::pow(params.hbar, 4);
  return -hbar4 * factor * std::pow(params.screening, 3) / (6.0 * params.strength * params.mass * params.mass);
}

double e1_general(const PhysicalParams& params, const QuantumNumbers& qn) {
  require_cosine_screening(params, "e1_general");
  qn.validate();
  return -params.strength * std::pow(params.screening, 3) / 3.0 * coulomb_r2_moment(params, qn);
}

double e1_quadrature(const PhysicalParams& params, const QuantumNumbers& qn, const QuadratureSpec& spec) {
  require_cosine_screening(params, "e1_quadrature");
  const CoulombState state(params, qn);
  const double coupling = -params.strength * std::pow(params.screening, 3) / 3.0;
  if (coupling == 0.0) return 0.0;
  auto integrand = [&](double r) {
    const double chi = state.chi(r);
    return chi * chi * r * r;
  };
  return coupling * integrate_adaptive(integrand, 0.0, spec.r_max, spec).value;
}

double w1_closed(const PhysicalParams& params, const QuantumNumbers& qn, double r) {
  require_cosine_screening(params, "w1_closed");
  qn.validate();
  const double N = qn.principal();
  const double reach = params.hbar * params.hbar * N * (N + 1.0) / (params.strength * params.mass);
  return -kinetic_scale(params) * N * std::pow(params.screening, 3) * r / 3.0 * (r + reach);
}

double w1_closed_slope(const PhysicalParams& params, const QuantumNumbers& qn, double r) {
  require_cosine_screening(params, "w1_closed");
  qn.validate();
  const double N = qn.principal();
  const double reach = params.hbar * params.hbar * N * (N + 1.0) / (params.strength * params.mass);
  return -kinetic_scale(params) * N * std::pow(params.screening, 3) / 3.0 * (2.0 * r + reach);
}

double w1_quadrature(const CoulombState& state, double e1, double r, const QuadratureSpec& spec) {
  const auto& params = state.params();
  require_cosine_screening(params, "w1_quadrature");
  if (!(r > 0.0)) throw DomainError(fmt::format("w1_quadrature requires r > 0, got {}", r));
  const double chi_r = state.chi(r);
  require_off_node(state, r, chi_r);
  const double coupling = params.strength * std::pow(params.screening, 3) / 3.0;
  auto integrand = [&](double x) {
    const double chi = state.chi(x);
    return chi * chi * (e1 + coupling * x * x);
  };
  const double chi_sq = chi_r * chi_r;
  // over [0, inf) the integrand sums to e1 - e1_exact
  const double total = e1 - (-coupling * coulomb_r2_moment(params, state.quantum_numbers()));
  const double partial = integral_from_origin(state, integrand, total, e1, r, chi_sq, spec);
  return partial / (kinetic_scale(params) * chi_sq);
}

double w1_quadrature(const CoulombState& state, double e1, double r) {
  return w1_quadrature(state, e1, r, default_quadrature(state));
}

double e2_closed(const PhysicalParams& params, const QuantumNumbers& qn) {
  require_cosine_screening(params, "e2_closed");
  require_closed_form_range(qn, "e2_closed");
  const double l = qn.l;
  double quartic = 0.0;
  double sextic = 0.0;
  switch (qn.n) {
    case 0:
      quartic = std::pow(l + 1, 3) * (l + 2) * (2 * l + 3) * (2 * l + 5);
      sextic = std::pow(l + 1, 6) * (l + 2) * (2 * l + 3) * (8 * l * l + 37 * l + 43);
      break;
    case 1:
      quartic = std::pow(l + 2, 3) * (l + 11) * (2 * l + 3) * (2 * l + 5);
      sextic = std::pow(l + 2, 6) * (l + 3) * (2 * l + 3) * (7 * l * l + 101 * l + 211);
      break;
    case 2:
      quartic = (l + 2) * std::pow(l + 3, 2) * (2 * l + 5) * (2 * l * l + 45 * l + 153);
      sextic = (l + 2) * std::pow(l + 3, 5) *
               (16 * std::pow(l, 4) + 474 * std::pow(l, 3) + 3879 * l * l + 12118 * l + 12873);
      break;
  }
  const double h = params.hbar;
  const double A = params.strength;
  const double m = params.mass;
  const double d = params.screening;
  return std::pow(h, 6) * quartic * std::pow(d, 4) / (24.0 * A * A * std::pow(m, 3)) -
         std::pow(h, 10) * sextic * std::pow(d, 6) / (72.0 * std::pow(A, 4) * std::pow(m, 5));
}

double e2_quadrature(const CoulombState& state, double e1, const QuadratureSpec& spec, FirstOrderSource source) {
  const auto& params = state.params();
  require_cosine_screening(params, "e2_quadrature");
  const auto& qn = state.quantum_numbers();
  if (qn.n != 0) {
    throw UnsupportedConfiguration(
        fmt::format("e2_quadrature needs a node-free state; {} has {} node(s)", qn.label(), qn.n));
  }
  if (params.screening == 0.0) return 0.0;
  const double cubic = params.strength * std::pow(params.screening, 4) / 6.0;
  auto integrand = [&](double r) {
    if (r == 0.0) return 0.0;
    const double chi = state.chi(r);
    const double chi_sq = chi * chi;
    if (chi_sq == 0.0) return 0.0;
    const double w1 = source == FirstOrderSource::kClosedForm ? w1_closed(params, qn, r)
                                                              : w1_quadrature(state, e1, r, spec);
    return chi_sq * (cubic * r * r * r - w1 * w1);
  };
  return integrate_adaptive(integrand, 0.0, spec.r_max, spec).value;
}

CorrectionCoefficients correction_coefficients(const PhysicalParams& params, int l) {
  require_cosine_screening(params, "correction_coefficients");
  if (l < 0) throw DomainError("l must be non-negative");
  if (params.screening == 0.0) {
    throw DegenerateInput("coefficient d contains 1/delta; use the pure Coulomb state for delta = 0");
  }
  const auto [a, b, c] = abc(params, l);
  const double L = l + 1.0;
  const double d = b + 6.0 * params.strength * params.mass / (params.hbar * params.hbar * L * L * params.screening);
  return {a, b, c, d};
}

double w2_closed(const PhysicalParams& params, int l, double r) {
  require_cosine_screening(params, "w2_closed");
  if (l < 0) throw DomainError("l must be non-negative");
  const auto [a, b, c] = abc(params, l);
  const double d = params.screening;
  const double reach = params.hbar * params.hbar * (l + 1.0) * (l + 2.0) / (params.strength * params.mass);
  const double bracket = d * d * r * r * r + a * r * r + b * (r + reach);
  return -kinetic_scale(params) * std::pow(d, 4) * c * r / 2.0 * bracket;
}

double w2_closed_slope(const PhysicalParams& params, int l, double r) {
  require_cosine_screening(params, "w2_closed");
  if (l < 0) throw DomainError("l must be non-negative");
  const auto [a, b, c] = abc(params, l);
  const double d = params.screening;
  const double reach = params.hbar * params.hbar * (l + 1.0) * (l + 2.0) / (params.strength * params.mass);
  // d/dr of r * (d^2 r^3 + a r^2 + b r + b reach)
  const double poly_slope = 4.0 * d * d * r * r * r + 3.0 * a * r * r + 2.0 * b * r + b * reach;
  return -kinetic_scale(params) * std::pow(d, 4) * c / 2.0 * poly_slope;
}

double w2_quadrature(const CoulombState& state, double e2, double r, const QuadratureSpec& spec) {
  const auto& params = state.params();
  require_cosine_screening(params, "w2_quadrature");
  const auto& qn = state.quantum_numbers();
  if (qn.n != 0) throw UnsupportedConfiguration("w2_quadrature needs a node-free state");
  if (!(r > 0.0)) throw DomainError(fmt::format("w2_quadrature requires r > 0, got {}", r));
  const double chi_r = state.chi(r);
  require_off_node(state, r, chi_r);
  const double cubic = params.strength * std::pow(params.screening, 4) / 6.0;
  auto integrand = [&](double x) {
    const double chi = state.chi(x);
    const double w1 = w1_closed(params, qn, x);
    return chi * chi * (e2 + w1 * w1 - cubic * x * x * x);
  };
  const double chi_sq = chi_r * chi_r;
  // over [0, inf) the integrand sums to e2 - e2_exact
  const double total = e2 - e2_closed(params, qn);
  const double partial = integral_from_origin(state, integrand, total, e2, r, chi_sq, spec);
  return partial / (kinetic_scale(params) * chi_sq);
}

EnergyBreakdown total_energy(const PhysicalParams& params, const QuantumNumbers& qn, int order) {
  require_cosine_screening(params, "total_energy");
  require_closed_form_range(qn, "total_energy");
  if (order < 0 || order > 2) throw DomainError(fmt::format("order must be 0, 1 or 2 (got {})", order));
  EnergyBreakdown out;
  out.e0 = unperturbed_energy(params, qn);
  out.shift = params.strength * params.screening;
  if (order >= 1) out.e1 = e1_closed(params, qn);
  if (order >= 2) out.e2 = e2_closed(params, qn);
  out.total = out.e0 + out.shift + out.e1 + out.e2;
  return out;
}

}  // namespace ecsc
