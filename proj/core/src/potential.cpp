#include "ecsc/potential.hpp"

#include <cmath>
#include <complex>

#include <fmt/core.h>

#include "ecsc/errors.hpp"

namespace ecsc {

PhysicalParams PhysicalParams::atomic(double delta, double g) {
  return PhysicalParams{1.0, delta, g, 1.0, 1.0};
}

PhysicalParams PhysicalParams::sqrt2_coupling(double G, double g) {
  const double A = std::sqrt(2.0);
  return PhysicalParams{A, G * A, g, 1.0, 1.0};
}

PhysicalParams PhysicalParams::hbar_2m_unit(double A, double delta, double g) {
  return PhysicalParams{A, delta, g, 1.0, 0.5};
}

const PhysicalParams& PhysicalParams::validate() const {
  if (!(strength > 0.0) || !(hbar > 0.0) || !(mass > 0.0)) {
    throw DomainError(fmt::format("A, hbar and m must be positive (A={}, hbar={}, m={})",
                                  strength, hbar, mass));
  }
  if (!(screening >= 0.0) || !(cosine_factor >= 0.0)) {
    throw DomainError(fmt::format("delta and g must be non-negative (delta={}, g={})",
                                  screening, cosine_factor));
  }
  return *this;
}

double SeriesCoefficients::sum(double x) const {
  double acc = 0.0;
  for (auto it = values.rbegin(); it != values.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ecsc_potential(const PhysicalParams& params, double r) {
  params.validate();
  if (!(r > 0.0)) throw DomainError(fmt::format("potential requires r > 0, got {}", r));
  const double dr = params.screening * r;
  return -(params.strength / r) * std::exp(-dr) * std::cos(params.cosine_factor * dr);
}

SeriesCoefficients series_coefficients(double g, int imax) {
  if (imax < 0) throw DomainError("series order must be non-negative");
  SeriesCoefficients out;
  out.g = g;
  out.values.reserve(static_cast<std::size_t>(imax) + 1);
  // (-(1 + i g))^k / k! built incrementally keeps the factorial and power in step.
  const std::complex<double> step(-1.0, -g);
  std::complex<double> term(1.0, 0.0);
  for (int k = 0; k <= imax; ++k) {
    if (k > 0) term *= step / static_cast<double>(k);
    out.values.push_back(term.real());
  }
  // The g = 1 entries are rationals with exact zeros at k = 2 mod 4; clean the
  // rounding residue so they compare exactly.
  if (g == 1.0) {
    for (int k = 2; k <= imax; k += 4) out.values[static_cast<std::size_t>(k)] = 0.0;
  }
  return out;
}

double series_potential(const PhysicalParams& params, double r, int imax) {
  params.validate();
  if (!(r > 0.0)) throw DomainError(fmt::format("potential requires r > 0, got {}", r));
  const auto coeffs = series_coefficients(params.cosine_factor, imax);
  return -(params.strength / r) * coeffs.sum(params.screening * r);
}

double truncated_perturbation(const PhysicalParams& params, double r, int order) {
  params.validate();
  if (params.cosine_factor != 1.0) {
    throw UnsupportedConfiguration(
        fmt::format("truncated perturbation is defined for g = 1, got g = {}", params.cosine_factor));
  }
  if (order < 1 || order > 5) {
    throw DomainError(fmt::format("truncation order must be in 1..5, got {}", order));
  }
  if (r < 0.0) throw DomainError(fmt::format("r must be non-negative, got {}", r));
  const double A = params.strength;
  const double d = params.screening;
  double value = A * d;
  if (order >= 3) value -= A * std::pow(d, 3) / 3.0 * r * r;
  if (order >= 4) value += A * std::pow(d, 4) / 6.0 * r * r * r;
  if (order >= 5) value -= A * std::pow(d, 5) / 30.0 * r * r * r * r;
  return value;
}

}  // namespace ecsc
