#include <benchmark/benchmark.h>

#include "ecsc/coulomb.hpp"
#include "ecsc/oracle.hpp"
#include "ecsc/perturbation.hpp"
#include "ecsc/potential.hpp"
#include "ecsc/report.hpp"
#include "ecsc/wavefunction.hpp"

namespace {

using ecsc::PhysicalParams;
using ecsc::QuantumNumbers;

void BM_ClosedFormEnergy(benchmark::State& state) {
  const auto p = PhysicalParams::atomic(0.05);
  const QuantumNumbers qn{static_cast<int>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(ecsc::total_energy(p, qn));
}
BENCHMARK(BM_ClosedFormEnergy)->Arg(0)->Arg(1)->Arg(2);

void BM_Potential(benchmark::State& state) {
  const auto p = PhysicalParams::atomic(0.1);
  double r = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecsc::ecsc_potential(p, r));
    r = r < 20.0 ? r + 0.01 : 0.5;
  }
}
BENCHMARK(BM_Potential);

void BM_E1Quadrature(benchmark::State& state) {
  const auto p = PhysicalParams::atomic(0.05);
  const QuantumNumbers qn{static_cast<int>(state.range(0)), 0};
  const auto spec = ecsc::default_quadrature(ecsc::CoulombState(p, qn));
  for (auto _ : state) benchmark::DoNotOptimize(ecsc::e1_quadrature(p, qn, spec));
}
BENCHMARK(BM_E1Quadrature)->Arg(0)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_E2Quadrature(benchmark::State& state) {
  const auto p = PhysicalParams::atomic(0.05);
  const ecsc::CoulombState s(p, {0, 0});
  const auto spec = ecsc::default_quadrature(s);
  const double e1 = ecsc::e1_closed(p, {0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecsc::e2_quadrature(s, e1, spec, ecsc::FirstOrderSource::kClosedForm));
  }
}
BENCHMARK(BM_E2Quadrature)->Unit(benchmark::kMillisecond);

void BM_OracleSolve(benchmark::State& state) {
  const auto p = PhysicalParams::atomic(0.05);
  const QuantumNumbers qn{static_cast<int>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(ecsc::solve_eigenvalue(p, qn));
}
BENCHMARK(BM_OracleSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FullPsi(benchmark::State& state) {
  const ecsc::PerturbedGroundState g(PhysicalParams::atomic(0.05), 0);
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.psi(r));
    r = r < 10.0 ? r + 0.01 : 0.1;
  }
}
BENCHMARK(BM_FullPsi);

void BM_BuildTableNoOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecsc::build_table(ecsc::TableId::T1, {.run_oracle = false}));
  }
}
BENCHMARK(BM_BuildTableNoOracle)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
