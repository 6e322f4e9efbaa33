#include "ecsc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/core.h>

#include "ecsc/errors.hpp"

namespace ecsc {

namespace {

constexpr double kRescaleThreshold = 1e150;

// Grid and 2m/hbar^2 * V_eff sampled once per solve; each trial energy reuses it.
class RadialGrid {
 public:
  RadialGrid(const PhysicalParams& params, int l, const OracleConfig& config)
      : l_(l), r_(static_cast<std::size_t>(config.num_points)), scaled_v_(r_.size()) {
    config.validate();
    const double h = config.step();
    const double factor = 2.0 * params.mass / (params.hbar * params.hbar);
    for (std::size_t i = 0; i < r_.size(); ++i) {
      r_[i] = config.r_min + static_cast<double>(i) * h;
      scaled_v_[i] = factor * effective_potential(params, l, r_[i]);
    }
    h2_12_ = h * h / 12.0;
    energy_factor_ = factor;
    // Small-r behaviour of the regular solution: r^{l+1} (1 - r / ((l+1) a0)).
    inverse_cusp_ = params.mass * params.strength / ((l + 1) * params.hbar * params.hbar);
  }

  ShootResult shoot(double energy) const {
    const std::size_t n = r_.size();
    const double e = energy_factor_ * energy;
    auto f = [&](std::size_t i) { return scaled_v_[i] - e; };

    double y_prev = std::pow(r_[0], l_ + 1) * (1.0 - inverse_cusp_ * r_[0]);
    double y_curr = std::pow(r_[1], l_ + 1) * (1.0 - inverse_cusp_ * r_[1]);
    double w_prev = (1.0 - h2_12_ * f(0)) * y_prev;
    double w_curr = (1.0 - h2_12_ * f(1)) * y_curr;
    double peak = std::max(std::abs(y_prev), std::abs(y_curr));
    int nodes = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      // Numerov in the w = (1 - h^2 f / 12) y form.
      const double w_next = 2.0 * w_curr - w_prev + 12.0 * h2_12_ * f(i) * y_curr;
      const double y_next = w_next / (1.0 - h2_12_ * f(i + 1));
      if (!std::isfinite(y_next)) {
        throw IntegrationFailure(fmt::format("Numerov integration diverged at r = {} (E = {})", r_[i + 1], energy));
      }
      if ((y_next < 0.0 && y_curr > 0.0) || (y_next > 0.0 && y_curr < 0.0)) ++nodes;
      w_prev = w_curr;
      w_curr = w_next;
      y_curr = y_next;
      peak = std::max(peak, std::abs(y_next));
      if (peak > kRescaleThreshold) {
        const double s = 1.0 / peak;
        w_prev *= s;
        w_curr *= s;
        y_curr *= s;
        peak = 1.0;
      }
    }
    return {y_curr / peak, nodes};
  }

 private:
  int l_;
  std::vector<double> r_;
  std::vector<double> scaled_v_;
  double h2_12_ = 0.0;
  double energy_factor_ = 0.0;
  double inverse_cusp_ = 0.0;
};

}  // namespace

OracleConfig OracleConfig::for_state(const PhysicalParams& params, const QuantumNumbers& qn) {
  params.validate();
  qn.validate();
  const double a0 = params.bohr_radius();
  const double N2 = static_cast<double>(qn.principal()) * qn.principal();
  const double crowding = 10.0 * params.screening * N2 * a0;
  // past crowding = 3/4 the formula would exceed the cap (or blow up), so it saturates
  const double stretch = crowding < 0.75 ? 1.0 / (1.0 - crowding) : 4.0;
  OracleConfig config;
  config.r_min = 1e-6 * a0;
  config.r_max = 40.0 * N2 * a0 * stretch;
  return config;
}

void OracleConfig::validate() const {
  if (!(r_min > 0.0) || !(r_max > 0.0) || r_min > 1e-4 * r_max) {
    throw DomainError(fmt::format("oracle grid needs 0 < r_min <= 1e-4 r_max (r_min={}, r_max={})", r_min, r_max));
  }
  if (num_points < 2000) throw DomainError(fmt::format("oracle grid needs >= 2000 points, got {}", num_points));
  if (!(energy_tolerance > 0.0) || max_bisections < 1) throw DomainError("invalid oracle search controls");
}

double effective_potential(const PhysicalParams& params, int l, double r) {
  if (!(r > 0.0)) throw DomainError(fmt::format("effective potential requires r > 0, got {}", r));
  return ecsc_potential(params, r) + params.hbar * params.hbar * l * (l + 1.0) / (2.0 * params.mass * r * r);
}

ShootResult shoot(const PhysicalParams& params, int l, double energy, const OracleConfig& config) {
  params.validate();
  if (l < 0) throw DomainError("l must be non-negative");
  if (!(energy < 0.0)) throw DomainError(fmt::format("bound-state shooting needs E < 0, got {}", energy));
  return RadialGrid(params, l, config).shoot(energy);
}

EigenResult solve_eigenvalue(const PhysicalParams& params, const QuantumNumbers& qn, const OracleConfig& config) {
  params.validate();
  qn.validate();
  const RadialGrid grid(params, qn.l, config);

  // |V| <= A/r, so no level lies below its Coulomb counterpart.
  const double coulomb = unperturbed_energy(params, qn);
  double lo = 1.01 * coulomb;
  double hi = -1e-12 * std::abs(coulomb);
  const auto above = [&](double e) { return grid.shoot(e).node_count > qn.n; };
  if (above(lo)) {
    throw IntegrationFailure(fmt::format("lower bracket {} already has more than {} nodes", lo, qn.n));
  }
  if (!above(hi)) {
    throw NoBoundState(fmt::format("{} is not bound at delta = {} (no node crossing below E = 0)", qn.label(),
                                   params.screening));
  }

  int iterations = 0;
  while (hi - lo > config.energy_tolerance && iterations < config.max_bisections) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) ? hi : lo) = mid;
    ++iterations;
  }

  // The terminal value crosses zero inside [lo, hi]; a few secant steps pin it
  // down, falling back to the bracket midpoint if they stray outside it.
  double energy = 0.5 * (lo + hi);
  double e0 = lo;
  double e1 = hi;
  double f0 = grid.shoot(e0).terminal_value;
  double f1 = grid.shoot(e1).terminal_value;
  for (int i = 0; i < 4 && f1 != f0; ++i) {
    const double e2 = e1 - f1 * (e1 - e0) / (f1 - f0);
    if (!(e2 >= lo && e2 <= hi)) break;
    energy = e2;
    e0 = e1;
    f0 = f1;
    e1 = e2;
    f1 = grid.shoot(e2).terminal_value;
    if (f1 == 0.0) break;
  }

  EigenResult result;
  result.energy = energy;
  // Just above the crossing a last node sits at r_max; count from below it.
  result.node_count = grid.shoot(lo).node_count;
  result.residual = std::abs(grid.shoot(energy).terminal_value);
  result.converged = hi - lo <= config.energy_tolerance;
  return result;
}

EigenResult solve_eigenvalue(const PhysicalParams& params, const QuantumNumbers& qn) {
  return solve_eigenvalue(params, qn, OracleConfig::for_state(params, qn));
}

}  // namespace ecsc
