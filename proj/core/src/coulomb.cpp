#include "ecsc/coulomb.hpp"

#include <cctype>
#include <cmath>

#include <fmt/core.h>

#include "ecsc/errors.hpp"

namespace ecsc {

namespace {

constexpr std::string_view kOrbitalLetters = "spdfghik";

double factorial(int n) { return std::exp(std::lgamma(n + 1.0)); }

// Value and x-derivative of L_n^k at x. dL_n^k/dx = -L_{n-1}^{k+1}.
struct LaguerreValue {
  double value;
  double slope;
};

LaguerreValue laguerre_with_slope(int n, int k, double x) {
  if (n == 0) return {1.0, 0.0};
  return {laguerre(n, k, x), -laguerre(n - 1, k + 1, x)};
}

}  // namespace

std::string QuantumNumbers::label() const {
  validate();
  if (static_cast<std::size_t>(l) < kOrbitalLetters.size()) {
    return fmt::format("{}{}", principal(), kOrbitalLetters[static_cast<std::size_t>(l)]);
  }
  return fmt::format("n{}l{}", n, l);
}

QuantumNumbers QuantumNumbers::from_label(std::string_view label) {
  std::size_t pos = 0;
  int principal = 0;
  while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
    principal = principal * 10 + (label[pos] - '0');
    ++pos;
  }
  if (pos == 0 || pos + 1 != label.size()) {
    throw DomainError(fmt::format("malformed state label '{}'", label));
  }
  const auto letter = static_cast<char>(std::tolower(static_cast<unsigned char>(label[pos])));
  const auto l = kOrbitalLetters.find(letter);
  if (l == std::string_view::npos) {
    throw DomainError(fmt::format("unknown orbital letter in state label '{}'", label));
  }
  QuantumNumbers qn{principal - static_cast<int>(l) - 1, static_cast<int>(l)};
  if (qn.n < 0) throw DomainError(fmt::format("state '{}' requires principal number > l", label));
  return qn;
}

void QuantumNumbers::validate() const {
  if (n < 0 || l < 0) throw DomainError(fmt::format("quantum numbers must be non-negative (n={}, l={})", n, l));
}

double laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) throw DomainError("laguerre requires n, k >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * curr - (j + k) * prev) / (j + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double unperturbed_energy(const PhysicalParams& params, const QuantumNumbers& qn) {
  params.validate();
  qn.validate();
  const double N = qn.principal();
  return -params.mass * params.strength * params.strength / (2.0 * params.hbar * params.hbar * N * N);
}

CoulombState::CoulombState(const PhysicalParams& params, QuantumNumbers qn)
    : params_(params), qn_(qn) {
  params_.validate();
  qn_.validate();
  const int N = qn_.principal();
  beta_ = params_.mass * params_.strength / (N * params_.hbar * params_.hbar);
  // From  int_0^inf x^{k+1} e^{-x} [L_n^k(x)]^2 dx = (2n+k+1) (n+k)!/n!  with k = 2l+1.
  const int k = 2 * qn_.l + 1;
  const double log_norm_sq = (2.0 * qn_.l + 3.0) * std::log(2.0 * beta_) + std::lgamma(qn_.n + 1.0) -
                             std::lgamma(qn_.n + k + 1.0) - std::log(2.0 * qn_.n + k + 1.0);
  norm_ = std::exp(0.5 * log_norm_sq);
}

double CoulombState::textbook_norm() const {
  const double N = qn_.principal();
  const double m = params_.mass;
  const double A = params_.strength;
  const double hbar = params_.hbar;
  const double lead = std::pow(2.0 * m * A / (N * hbar * hbar), qn_.l + 1) / N;
  return lead / std::sqrt(hbar * hbar / (m * A * factorial(qn_.n)) * factorial(qn_.n + 2 * qn_.l + 1));
}

double CoulombState::chi(double r) const {
  if (r < 0.0) throw DomainError(fmt::format("chi requires r >= 0, got {}", r));
  if (r == 0.0) return 0.0;
  return norm_ * std::pow(r, qn_.l + 1) * std::exp(-beta_ * r) * laguerre(qn_.n, 2 * qn_.l + 1, 2.0 * beta_ * r);
}

double CoulombState::chi_derivative(double r) const {
  if (r < 0.0) throw DomainError(fmt::format("chi requires r >= 0, got {}", r));
  const double x = 2.0 * beta_ * r;
  const auto lag = laguerre_with_slope(qn_.n, 2 * qn_.l + 1, x);
  const double envelope = norm_ * std::pow(r, qn_.l) * std::exp(-beta_ * r);
  return envelope * (((qn_.l + 1) - beta_ * r) * lag.value + x * lag.slope);
}

double CoulombState::superpotential(double r) const {
  if (!(r > 0.0)) throw DomainError(fmt::format("superpotential requires r > 0, got {}", r));
  const double x = 2.0 * beta_ * r;
  const auto lag = laguerre_with_slope(qn_.n, 2 * qn_.l + 1, x);
  if (std::abs(lag.value) <= 1e-12 * std::abs(x * lag.slope)) {
    throw PoleError(fmt::format("superpotential of {} has a pole at r = {}", qn_.label(), r));
  }
  const double log_slope = (qn_.l + 1) / r - beta_ + 2.0 * beta_ * lag.slope / lag.value;
  return -params_.hbar / std::sqrt(2.0 * params_.mass) * log_slope;
}

double ground_superpotential(const PhysicalParams& params, int l, double r) {
  params.validate();
  if (!(r > 0.0)) throw DomainError(fmt::format("superpotential requires r > 0, got {}", r));
  const double hbar = params.hbar;
  const double m = params.mass;
  return -hbar / std::sqrt(2.0 * m) * (l + 1) / r + std::sqrt(m / 2.0) * params.strength / ((l + 1) * hbar);
}

}  // namespace ecsc
