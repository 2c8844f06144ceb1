// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "nmrsim/nmrsim.hpp"

using namespace nmrsim;

namespace {

DensityMatrix random_density(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::assume_valid(rho);
}

void BM_Evolve(benchmark::State& state) {
  const PaperDataset& ds = load_dataset();
  const DensityMatrix rho = DensityMatrix::assume_valid(ds.rho_initial, ValidationProfile::experimental());
  for (auto _ : state) benchmark::DoNotOptimize(evolve(rho, ds.c_corrected));
}
BENCHMARK(BM_Evolve);

void BM_Fidelity(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  const DensityMatrix a = random_density(rng, dim);
  const DensityMatrix b = random_density(rng, dim);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(a, b));
}
BENCHMARK(BM_Fidelity)->Arg(2)->Arg(4)->Arg(8);

void BM_ProjectPsd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  ComplexMatrix h = random_density(rng, dim).matrix();
  h(0, 0) += 0.2;
  h(1, 1) -= 0.2;
  for (auto _ : state) benchmark::DoNotOptimize(project_psd(h));
}
BENCHMARK(BM_ProjectPsd)->Arg(4)->Arg(8);

void BM_CriticalEpsilon(benchmark::State& state) {
  const DensityMatrix bell = histories::bell_states().front().projector();
  for (auto _ : state) benchmark::DoNotOptimize(critical_epsilon(bell));
}
BENCHMARK(BM_CriticalEpsilon);

void BM_CriticalEpsilonBisection(benchmark::State& state) {
  const DensityMatrix bell = histories::bell_states().front().projector();
  for (auto _ : state) benchmark::DoNotOptimize(critical_epsilon_bisection(bell));
}
BENCHMARK(BM_CriticalEpsilonBisection);

void BM_Tomography(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const DensityMatrix rho = random_density(rng, 4);
  const auto shots = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_tomography(rho, shots, ++seed));
}
BENCHMARK(BM_Tomography)->Arg(0)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
