#pragma once

#include "ecsc/coulomb.hpp"
#include "ecsc/potential.hpp"

namespace ecsc {

/// Uniform radial grid and search controls for the Numerov eigensolver.
struct OracleConfig {
  double r_min = 1e-6;
  double r_max = 40.0;
  int num_points = 20000;
  double energy_tolerance = 1e-10;
  int max_bisections = 200;

  /// Defaults scaled to the Bohr radius a0 = hbar^2/(mA) of the target state:
  ///   r_min = 1e-6 a0,
  ///   r_max = 40 N^2 a0 * clamp(1/(1 - 10 delta N^2 a0), 1, 4),
  /// 20000 points and a 1e-10 energy tolerance.
  static OracleConfig for_state(const PhysicalParams& params, const QuantumNumbers& qn);

  /// r_min <= 1e-4 r_max, num_points >= 2000, positive tolerances.
  void validate() const;
  double step() const { return (r_max - r_min) / (num_points - 1); }
};

struct ShootResult {
  double terminal_value = 0.0;  ///< chi(r_max) / max|chi| on the grid
  int node_count = 0;           ///< interior sign changes
};

struct EigenResult {
  double energy = 0.0;
  int node_count = 0;
  double residual = 0.0;  ///< |terminal_value| at the returned energy
  bool converged = false;
};

/// Exact (unexpanded) potential plus the centrifugal barrier. Throws DomainError for r <= 0.
double effective_potential(const PhysicalParams& params, int l, double r);

/// Outward Numerov integration of chi'' = (2m/hbar^2)(V_eff - E) chi from
/// chi(r_min) = r_min^{l+1}. The running solution is rescaled whenever it grows
/// past 1e150; non-finite values raise IntegrationFailure.
ShootResult shoot(const PhysicalParams& params, int l, double energy, const OracleConfig& config);

/// Eigenvalue of the state with exactly qn.n nodes, by node-count bisection
/// followed by secant refinement of the terminal value. Throws NoBoundState
/// if the level is not bound below E = 0 on the configured grid.
EigenResult solve_eigenvalue(const PhysicalParams& params, const QuantumNumbers& qn, const OracleConfig& config);
EigenResult solve_eigenvalue(const PhysicalParams& params, const QuantumNumbers& qn);

}  // namespace ecsc
