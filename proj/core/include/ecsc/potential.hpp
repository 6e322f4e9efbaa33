#pragma once

#include <vector>

namespace ecsc {

/// Physical constants and potential parameters for
///   V(r) = -(A/r) exp(-delta r) cos(g delta r).
///
/// All quantities are expressed in one consistent unit system chosen by the
/// caller; the named presets cover the conventions of the reference tables.
struct PhysicalParams {
  double strength = 1.0;       ///< A, energy x length
  double screening = 0.0;      ///< delta, 1/length
  double cosine_factor = 1.0;  ///< g, dimensionless
  double hbar = 1.0;
  double mass = 1.0;

  /// hbar = m = A = 1.
  static PhysicalParams atomic(double delta, double g = 1.0);
  /// hbar = m = 1, A = sqrt(2), delta = G * A.
  static PhysicalParams sqrt2_coupling(double G, double g = 1.0);
  /// hbar = 2m = 1 (m = 1/2) with free strength A.
  static PhysicalParams hbar_2m_unit(double A, double delta, double g = 1.0);

  /// Throws DomainError unless A, hbar, m > 0 and delta, g >= 0.
  const PhysicalParams& validate() const;

  /// Length scale hbar^2/(m A) (the Bohr radius of the unscreened problem).
  double bohr_radius() const { return hbar * hbar / (mass * strength); }

  PhysicalParams with_screening(double delta) const {
    PhysicalParams copy = *this;
    copy.screening = delta;
    return copy;
  }
};

/// Taylor coefficients of exp(-x) cos(g x) = sum_i values[i] x^i.
struct SeriesCoefficients {
  std::vector<double> values;
  double g = 1.0;

  /// Horner evaluation of the truncated series at x = delta r.
  double sum(double x) const;
};

/// Exact potential. Throws DomainError for r <= 0.
double ecsc_potential(const PhysicalParams& params, double r);

/// V_i = Re[(-(1 + i g))^i] / i!, which for g = 1 gives 1, -1, 0, 1/3, -1/6, 1/30, ...
/// The g != 1 values are a generalisation of the tabulated g = 1 sequence.
SeriesCoefficients series_coefficients(double g, int imax);

/// -(A/r) * sum_{i<=imax} V_i (delta r)^i.
double series_potential(const PhysicalParams& params, double r, int imax);

/// Perturbing part of the g = 1 potential after removing the Coulomb term:
///   A delta - (A delta^3/3) r^2 + (A delta^4/6) r^3 - (A delta^5/30) r^4
/// keeping powers of delta up to `order` (1..5). Orders below 3 keep only A delta.
double truncated_perturbation(const PhysicalParams& params, double r, int order = 5);

}  // namespace ecsc
