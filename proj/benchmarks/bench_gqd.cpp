#include <benchmark/benchmark.h>

#include "gqd/discord.hpp"
#include "gqd/flow.hpp"
#include "gqd/matrix.hpp"
#include "gqd/reservoir.hpp"
#include "gqd/volterra.hpp"

using namespace gqd;

namespace {

void BM_HermitianEigen4(benchmark::State& state) {
  const DensityMatrix rho = two_qubit_state(InitialState(0.7), 0.45);
  ComplexMatrix m = rho.mat();
  m(0, 3) = m(3, 0) = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen4);

void BM_HddEigen(benchmark::State& state) {
  const DensityMatrix rho = two_qubit_state(InitialState(0.7), 0.45);
  for (auto _ : state) benchmark::DoNotOptimize(hdd_eigen(rho));
}
BENCHMARK(BM_HddEigen);

void BM_BddFidelityMax(benchmark::State& state) {
  const DensityMatrix rho = two_qubit_state(InitialState(0.7), 0.45);
  for (auto _ : state) benchmark::DoNotOptimize(bdd_fidelity_max(rho));
}
BENCHMARK(BM_BddFidelityMax)->Unit(benchmark::kMillisecond);

void BM_TddBruteForce(benchmark::State& state) {
  const DensityMatrix rho = two_qubit_state(InitialState(0.7), 0.45);
  for (auto _ : state) benchmark::DoNotOptimize(tdd_bruteforce(rho));
}
BENCHMARK(BM_TddBruteForce)->Unit(benchmark::kMillisecond);

// Steps on the time grid: the history sum makes the cost quadratic in this number.
void BM_VolterraLorentzian(benchmark::State& state) {
  const auto model = SpectralModel::lorentzian(1.0, 0.5);
  const SolverConfig cfg{.t_max = 10.0, .dt = 10.0 / static_cast<double>(state.range(0))};
  const auto f = kernel(model);
  for (auto _ : state) benchmark::DoNotOptimize(solve(f, model.omega0, cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VolterraLorentzian)->RangeMultiplier(2)->Range(1000, 16000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_RegionMapLorentzian(benchmark::State& state) {
  RegionMapRequest req;
  req.state = InitialState(0.7);
  req.family = SpectralModel::lorentzian(1.0, 1.0);
  req.solver = {.t_max = 50.0, .dt = 1e-3};
  req.param_steps = 50;
  req.time_samples = 500;
  for (auto _ : state) benchmark::DoNotOptimize(region_map(req));
}
BENCHMARK(BM_RegionMapLorentzian)->Unit(benchmark::kMillisecond);

void BM_RegionMapOhmicRow(benchmark::State& state) {
  RegionMapRequest req;
  req.state = InitialState(0.5);
  req.family = SpectralModel::ohmic(0.1, 3.0, 2.0);
  req.solver = default_solver_config(req.family, 10.0);
  req.param_min = req.param_max = 0.5;
  req.param_steps = 2;
  req.time_samples = 500;
  for (auto _ : state) benchmark::DoNotOptimize(region_map(req));
}
BENCHMARK(BM_RegionMapOhmicRow)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
