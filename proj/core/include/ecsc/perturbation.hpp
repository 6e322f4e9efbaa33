#pragma once

#include "ecsc/coulomb.hpp"
#include "ecsc/potential.hpp"
#include "ecsc/quadrature.hpp"

namespace ecsc {

/// E = e0 + shift + e1 + e2, where shift = A delta is the constant term of the
/// expanded perturbation and e1, e2 come from its r^2 and r^3 terms.
struct EnergyBreakdown {
  double e0 = 0.0;
  double shift = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double total = 0.0;
};

/// Constants of the second-order ground-state superpotential. d carries a
/// 1/delta term and is only meaningful for delta > 0.
struct CorrectionCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// Domain large enough that chi^2 (times the polynomial weights of the
/// correction integrands) has decayed below 1e-16 of its peak.
QuadratureSpec default_quadrature(const CoulombState& state);

// First order -----------------------------------------------------------------

/// Closed forms for n = 0, 1, 2 (g = 1). Throws OutOfRange for n > 2.
double e1_closed(const PhysicalParams& params, const QuantumNumbers& qn);

/// -(A delta^3 / 3) <r^2>_{n,l} for any n, using the hydrogenic moment
///   <r^2> = (hbar^2/(m A))^2 N^2 (5 N^2 + 1 - 3 l (l + 1)) / 2.
double e1_general(const PhysicalParams& params, const QuantumNumbers& qn);

/// Same quantity by adaptive quadrature of chi^2 * (-(A delta^3/3) r^2).
double e1_quadrature(const PhysicalParams& params, const QuantumNumbers& qn, const QuadratureSpec& spec);

/// First-order superpotential
///   -(hbar N delta^3 r / (3 sqrt(2m))) (r + hbar^2 N (N + 1) / (A m)),  N = n + l + 1.
double w1_closed(const PhysicalParams& params, const QuantumNumbers& qn, double r);
/// d/dr of w1_closed.
double w1_closed_slope(const PhysicalParams& params, const QuantumNumbers& qn, double r);

/// (sqrt(2m)/hbar) chi^{-2}(r) * int_0^r chi^2(x) (e1 + A delta^3 x^2 / 3) dx.
/// Throws PoleError when r sits on a node of chi.
double w1_quadrature(const CoulombState& state, double e1, double r, const QuadratureSpec& spec);
double w1_quadrature(const CoulombState& state, double e1, double r);

// Second order ----------------------------------------------------------------

/// Two-term (delta^4, delta^6) closed forms for n = 0, 1, 2; n = 1, 2 are the
/// approximate excited-state expressions. Throws OutOfRange for n > 2.
double e2_closed(const PhysicalParams& params, const QuantumNumbers& qn);

enum class FirstOrderSource { kQuadrature, kClosedForm };

/// int chi^2 [ (A delta^4/6) r^3 - W1(r)^2 ] dr for node-free states.
/// Throws UnsupportedConfiguration for n >= 1.
double e2_quadrature(const CoulombState& state, double e1, const QuadratureSpec& spec,
                     FirstOrderSource source = FirstOrderSource::kQuadrature);

/// a, b, c, d for the ground state of orbital l. Throws DegenerateInput when
/// delta = 0 (d is undefined).
CorrectionCoefficients correction_coefficients(const PhysicalParams& params, int l);

/// Second-order ground-state superpotential
///   -(hbar delta^4 c r / (2 sqrt(2m))) { delta^2 r^3 + a r^2 + b [r + hbar^2 (l+1)(l+2)/(A m)] },
/// which vanishes at r = 0 and satisfies the second-order Riccati equation exactly.
double w2_closed(const PhysicalParams& params, int l, double r);
double w2_closed_slope(const PhysicalParams& params, int l, double r);

/// (sqrt(2m)/hbar) chi^{-2}(r) int_0^r chi^2 [e2 + W1^2 - (A delta^4/6) x^3] dx with
/// the closed-form W1; ground states only.
double w2_quadrature(const CoulombState& state, double e2, double r, const QuadratureSpec& spec);

// Totals ----------------------------------------------------------------------

/// e0 + A delta + e1 + e2 with corrections included up to `order` (0..2).
EnergyBreakdown total_energy(const PhysicalParams& params, const QuantumNumbers& qn, int order = 2);

}  // namespace ecsc
