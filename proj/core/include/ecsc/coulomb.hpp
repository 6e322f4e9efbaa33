#pragma once

#include <string>
#include <string_view>

#include "ecsc/potential.hpp"

namespace ecsc {

/// Radial quantum number n (node count) and orbital l.
struct QuantumNumbers {
  int n = 0;
  int l = 0;

  int principal() const { return n + l + 1; }

  /// Spectroscopic label: 1s = (0,0), 2s = (1,0), 2p = (0,1), 3d = (0,2), ...
  std::string label() const;
  /// Inverse of label(); throws DomainError on malformed input.
  static QuantumNumbers from_label(std::string_view label);

  void validate() const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Associated Laguerre polynomial L_n^k(x) by upward three-term recurrence.
double laguerre(int n, int k, double x);

/// -m A^2 / (2 hbar^2 (n + l + 1)^2).
double unperturbed_energy(const PhysicalParams& params, const QuantumNumbers& qn);

/// Pure-Coulomb bound state chi(r) = N r^{l+1} exp(-beta r) L_n^{2l+1}(2 beta r),
/// normalised so that the integral of chi^2 over [0, inf) is one.
class CoulombState {
 public:
  CoulombState(const PhysicalParams& params, QuantumNumbers qn);

  const PhysicalParams& params() const { return params_; }
  const QuantumNumbers& quantum_numbers() const { return qn_; }
  /// m A / ((n + l + 1) hbar^2).
  double beta() const { return beta_; }
  double norm() const { return norm_; }
  double energy() const { return unperturbed_energy(params_, qn_); }

  /// The normalisation constant written in the hydrogenic textbook form
  ///   [2mA/(N hbar^2)]^{l+1} (1/N) / sqrt(hbar^2 (n+2l+1)! / (m A n!)).
  /// Kept as an independent cross-check of norm().
  double textbook_norm() const;

  /// Throws DomainError for r < 0.
  double chi(double r) const;
  double chi_derivative(double r) const;

  /// W(r) = -(hbar/sqrt(2m)) chi'(r)/chi(r), analytic in r. Throws PoleError at
  /// (or numerically next to) a node and DomainError for r <= 0.
  double superpotential(double r) const;

 private:
  PhysicalParams params_;
  QuantumNumbers qn_;
  double beta_;
  double norm_;
};

/// Closed form of the node-free superpotential:
///   -(hbar/sqrt(2m)) (l+1)/r + sqrt(m/2) A / ((l+1) hbar).
double ground_superpotential(const PhysicalParams& params, int l, double r);

}  // namespace ecsc
