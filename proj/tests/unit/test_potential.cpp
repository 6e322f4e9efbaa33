#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "ecsc/errors.hpp"
#include "ecsc/potential.hpp"

namespace {

using ecsc::PhysicalParams;

TEST(Potential, CoulombLimitAtZeroScreening) {
  const auto p = PhysicalParams::atomic(0.0);
  EXPECT_DOUBLE_EQ(ecsc::ecsc_potential(p, 2.0), -0.5);
  for (double r = 1e-3; r < 100.0; r *= 1.7) {
    EXPECT_EQ(ecsc::ecsc_potential(p, r), -1.0 / r) << r;
  }
}

TEST(Potential, DirectEvaluation) {
  // quoted to six digits, truncated
  EXPECT_NEAR(ecsc::ecsc_potential(PhysicalParams::atomic(0.1), 1.0), -0.900316, 1e-6);
  EXPECT_NEAR(ecsc::ecsc_potential(PhysicalParams::atomic(0.1, 0.0), 1.0), -0.904837, 1e-6);
  EXPECT_DOUBLE_EQ(ecsc::ecsc_potential(PhysicalParams::atomic(0.1), 1.0), -std::exp(-0.1) * std::cos(0.1));
}

TEST(Potential, RejectsNonPositiveRadius) {
  const auto p = PhysicalParams::atomic(0.1);
  EXPECT_THROW(ecsc::ecsc_potential(p, 0.0), ecsc::DomainError);
  EXPECT_THROW(ecsc::ecsc_potential(p, -1.0), ecsc::DomainError);
}

TEST(Potential, ParameterValidation) {
  EXPECT_THROW((PhysicalParams{-1.0, 0.1}.validate()), ecsc::DomainError);
  EXPECT_THROW((PhysicalParams{1.0, -0.1}.validate()), ecsc::DomainError);
  EXPECT_THROW((PhysicalParams{1.0, 0.1, 1.0, 0.0}.validate()), ecsc::DomainError);
  EXPECT_THROW((PhysicalParams{1.0, 0.1, 1.0, 1.0, 0.0}.validate()), ecsc::DomainError);
  EXPECT_NO_THROW(PhysicalParams::atomic(0.0).validate());
}

TEST(Potential, Presets) {
  const auto t5 = PhysicalParams::sqrt2_coupling(0.05);
  EXPECT_DOUBLE_EQ(t5.strength, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(t5.screening, 0.05 * std::sqrt(2.0));
  const auto t6 = PhysicalParams::hbar_2m_unit(4.0, 0.2);
  EXPECT_DOUBLE_EQ(t6.mass, 0.5);
  EXPECT_DOUBLE_EQ(t6.hbar, 1.0);
  EXPECT_DOUBLE_EQ(t6.bohr_radius(), 0.5);
}

TEST(SeriesCoefficients, UnitCosineFactorIsExact) {
  const auto s = ecsc::series_coefficients(1.0, 5);
  ASSERT_EQ(s.values.size(), 6u);
  EXPECT_EQ(s.values[0], 1.0);
  EXPECT_EQ(s.values[1], -1.0);
  EXPECT_EQ(s.values[2], 0.0);
  EXPECT_DOUBLE_EQ(s.values[3], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.values[4], -1.0 / 6.0);
  EXPECT_DOUBLE_EQ(s.values[5], 1.0 / 30.0);
}

TEST(SeriesCoefficients, YukawaAndGeneralG) {
  const auto y = ecsc::series_coefficients(0.0, 3);
  EXPECT_EQ(y.values[0], 1.0);
  EXPECT_EQ(y.values[1], -1.0);
  EXPECT_DOUBLE_EQ(y.values[2], 0.5);
  EXPECT_DOUBLE_EQ(y.values[3], -1.0 / 6.0);
  const auto g2 = ecsc::series_coefficients(2.0, 2);
  EXPECT_DOUBLE_EQ(g2.values[2], -1.5);
}

TEST(SeriesCoefficients, MatchComplexPowerAndBound) {
  for (double g : {0.0, 0.5, 1.0, 2.0, 3.7}) {
    const auto s = ecsc::series_coefficients(g, 20);
    double fact = 1.0;
    for (int i = 0; i <= 20; ++i) {
      if (i > 0) fact *= i;
      const auto z = std::pow(std::complex<double>(-1.0, -g), i);
      EXPECT_NEAR(s.values[i], z.real() / fact, 1e-14 * std::abs(z) / fact + 1e-300) << g << " " << i;
      EXPECT_LE(std::abs(s.values[i]), std::pow(1.0 + g * g, i / 2.0) / fact * (1.0 + 1e-12));
    }
  }
}

TEST(SeriesCoefficients, ZeroOrderOnly) {
  const auto s = ecsc::series_coefficients(1.0, 0);
  ASSERT_EQ(s.values.size(), 1u);
  EXPECT_EQ(s.sum(0.3), 1.0);
}

// Twelve terms leave |V_13| (delta r)^13 ~ 1e-12 at delta r = 0.5, so the 1e-12 relative
// target is checked with two extra terms; twelve terms are held to the remainder bound.
TEST(SeriesPotential, ConvergesToExactPotential) {
  for (double delta : {0.01, 0.05, 0.1}) {
    const auto p = PhysicalParams::atomic(delta);
    for (double r = 1e-3; r <= 50.0; r *= 1.25) {
      const double x = delta * r;
      if (x > 0.5) continue;
      const double exact = ecsc::ecsc_potential(p, r);
      EXPECT_NEAR(ecsc::series_potential(p, r, 14), exact, 1e-12 * std::abs(exact)) << delta << " " << r;
      const double tail = std::pow(2.0, 6.5) * std::pow(x, 13) / 6227020800.0 / r / (1.0 - std::sqrt(2.0) * x / 14.0);
      EXPECT_NEAR(ecsc::series_potential(p, r, 12), exact, tail + 1e-15 * std::abs(exact)) << delta << " " << r;
    }
  }
}

TEST(TruncatedPerturbation, Examples) {
  const auto p = PhysicalParams::atomic(0.1);
  EXPECT_DOUBLE_EQ(ecsc::truncated_perturbation(p, 0.0, 5), 0.1);
  EXPECT_NEAR(ecsc::truncated_perturbation(p, 1.0, 3), 0.1 - 0.001 / 3.0, 1e-15);
  EXPECT_NEAR(ecsc::truncated_perturbation(p, 2.0, 5), 0.1 - (1e-3 / 3) * 4 + (1e-4 / 6) * 8 - (1e-5 / 30) * 16, 1e-15);
  EXPECT_NEAR(ecsc::truncated_perturbation(p, 2.0, 5), 0.0987947, 5e-8);
  EXPECT_DOUBLE_EQ(ecsc::truncated_perturbation(p, 3.0, 2), 0.1);
}

TEST(TruncatedPerturbation, RemainderBound) {
  // V_6 = 0 at g = 1, so the tail starts at i = 7; |V_i| <= 2^(i/2)/i! and the
  // term ratio is at most sqrt(2) x / 8.
  for (double delta : {0.02, 0.1}) {
    const auto p = PhysicalParams::atomic(delta);
    for (double r = 0.1; r < 5.0; r += 0.3) {
      const double x = delta * r;
      const double exact = ecsc::ecsc_potential(p, r) + 1.0 / r;
      const double bound = std::pow(2.0, 3.5) * std::pow(x, 7) / 5040.0 / r / (1.0 - std::sqrt(2.0) * x / 8.0);
      EXPECT_LE(std::abs(ecsc::truncated_perturbation(p, r, 5) - exact), bound + 1e-14) << delta << " " << r;
    }
  }
}

TEST(TruncatedPerturbation, Errors) {
  EXPECT_THROW(ecsc::truncated_perturbation(PhysicalParams::atomic(0.1, 0.5), 1.0), ecsc::UnsupportedConfiguration);
  EXPECT_THROW(ecsc::truncated_perturbation(PhysicalParams::atomic(0.1), 1.0, 0), ecsc::DomainError);
  EXPECT_THROW(ecsc::truncated_perturbation(PhysicalParams::atomic(0.1), 1.0, 6), ecsc::DomainError);
}

}  // namespace
