#pragma once

#include <array>

#include "ecsc/potential.hpp"

namespace ecsc {

/// Exponent P(r) = p1 r + p2 r^2 + ... + p5 r^5 of the perturbed ground state.
struct PolynomialP {
  std::array<double, 5> coefficients{};  ///< p1..p5

  double p(int i) const { return coefficients.at(static_cast<std::size_t>(i - 1)); }
  double operator()(double r) const;
  double slope(double r) const;
};

/// P(r) for the node-free state of orbital l:
///   p1 = -beta, and p2..p5 from integrating the first- and second-order
///   superpotentials, which reproduces
///   p2 = (9/4)(l+2)/(l+1)^2 c^2 d delta^4, p3 = c d delta^4/6,
///   p4 = a c delta^4/8,                    p5 = c delta^6/10.
/// Throws DegenerateInput for delta = 0 (use the Coulomb state directly).
PolynomialP p_coefficients(const PhysicalParams& params, int l);

/// Perturbed ground-state radial function psi = chi * u with the truncated
/// exponent. exp(P) grows without bound once P'(r) turns positive, so every
/// evaluation is meaningful only below validity_radius().
class PerturbedGroundState {
 public:
  PerturbedGroundState(const PhysicalParams& params, int l);

  const PhysicalParams& params() const { return params_; }
  int l() const { return l_; }
  const PolynomialP& exponent() const { return exponent_; }
  /// Coulomb normalisation shared with chi (no renormalisation of psi).
  double prefactor() const { return prefactor_; }
  /// First r > 0 where P'(r) turns non-negative; +inf if it never does.
  double validity_radius() const { return r_valid_; }

  /// exp(-(sqrt(2m)/hbar) int_0^r (W1 + W2) dx), evaluated analytically.
  double moderating(double r) const;
  double psi(double r) const;
  /// d/dr ln psi = (l+1)/r + P'(r).
  double log_derivative(double r) const;

 private:
  PhysicalParams params_;
  int l_;
  PolynomialP exponent_;  // includes p1 = -beta; zero corrections at delta = 0
  double beta_;
  double prefactor_;
  double r_valid_;
};

double moderating_u(const PhysicalParams& params, int l, double r);
double full_psi(const PhysicalParams& params, int l, double r);

}  // namespace ecsc
