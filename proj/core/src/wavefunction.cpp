#include "ecsc/wavefunction.hpp"

#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "ecsc/coulomb.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/perturbation.hpp"

namespace ecsc {

namespace {

// Coefficients of -(sqrt(2m)/hbar) * int_0^r (W1 + W2) dx, plus -beta r.
PolynomialP integrated_exponent(const PhysicalParams& p, int l) {
  if (p.cosine_factor != 1.0) throw UnsupportedConfiguration("the perturbed ground state is derived for g = 1");
  if (l < 0) throw DomainError("l must be non-negative");
  const double L = l + 1.0;
  const double hbar2 = p.hbar * p.hbar;
  const double beta = p.mass * p.strength / (L * hbar2);
  const double reach = hbar2 * L * (l + 2.0) / (p.strength * p.mass);
  PolynomialP out;
  out.coefficients[0] = -beta;
  const double d = p.screening;
  if (d == 0.0) return out;
  const double d3 = d * d * d;
  const double d4 = d3 * d;
  const double d6 = d4 * d * d;
  const auto [a, b, c, unused_d] = correction_coefficients(p, l);
  // W1 = -(hbar/sqrt(2m)) L delta^3 (r^2 + reach r) / 3
  // W2 = -(hbar/sqrt(2m)) delta^4 c (delta^2 r^4 + a r^3 + b r^2 + b reach r) / 2
  out.coefficients[1] = L * d3 * reach / 6.0 + d4 * c * b * reach / 4.0;
  out.coefficients[2] = L * d3 / 9.0 + d4 * c * b / 6.0;
  out.coefficients[3] = d4 * c * a / 8.0;
  out.coefficients[4] = d6 * c / 10.0;
  return out;
}

double first_upturn(const PolynomialP& poly, double length_scale) {
  // Geometric scan for the first sign change of P', then bisection.
  double lo = 1e-3 * length_scale;
  if (poly.slope(lo) >= 0.0) return lo;
  const double limit = 1e9 * length_scale;
  while (lo < limit) {
    const double hi = lo * 1.02;
    if (poly.slope(hi) >= 0.0) {
      double a = lo;
      double b = hi;
      for (int i = 0; i < 200 && b - a > 1e-14 * b; ++i) {
        const double mid = 0.5 * (a + b);
        (poly.slope(mid) >= 0.0 ? b : a) = mid;
      }
      return b;
    }
    lo = hi;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

double PolynomialP::operator()(double r) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = (acc + *it) * r;
  return acc;
}

double PolynomialP::slope(double r) const {
  double acc = 0.0;
  for (int i = 5; i >= 1; --i) acc = acc * r + i * coefficients[static_cast<std::size_t>(i - 1)];
  return acc;
}

PolynomialP p_coefficients(const PhysicalParams& params, int l) {
  params.validate();
  if (params.screening == 0.0) {
    throw DegenerateInput("P(r) is defined for delta > 0; at delta = 0 psi is the Coulomb state");
  }
  return integrated_exponent(params, l);
}

PerturbedGroundState::PerturbedGroundState(const PhysicalParams& params, int l)
    : params_(params), l_(l) {
  params_.validate();
  exponent_ = integrated_exponent(params_, l_);
  beta_ = -exponent_.coefficients[0];
  prefactor_ = CoulombState(params_, QuantumNumbers{0, l_}).norm();
  r_valid_ = first_upturn(exponent_, params_.bohr_radius());
}

double PerturbedGroundState::moderating(double r) const {
  if (r < 0.0) throw DomainError(fmt::format("r must be non-negative, got {}", r));
  return std::exp(exponent_(r) + beta_ * r);
}

double PerturbedGroundState::psi(double r) const {
  if (r < 0.0) throw DomainError(fmt::format("r must be non-negative, got {}", r));
  if (r == 0.0) return 0.0;
  return prefactor_ * std::pow(r, l_ + 1) * std::exp(exponent_(r));
}

double PerturbedGroundState::log_derivative(double r) const {
  if (!(r > 0.0)) throw DomainError(fmt::format("log derivative requires r > 0, got {}", r));
  return (l_ + 1) / r + exponent_.slope(r);
}

double moderating_u(const PhysicalParams& params, int l, double r) {
  return PerturbedGroundState(params, l).moderating(r);
}

double full_psi(const PhysicalParams& params, int l, double r) {
  if (params.screening == 0.0) throw DegenerateInput("full_psi needs delta > 0; at delta = 0 psi is the Coulomb state");
  return PerturbedGroundState(params, l).psi(r);
}

}  // namespace ecsc
