// Serial reference vs OpenMP kernels, plus one full propagation step.
//
//   OMP_NUM_THREADS=4 ./build/bench/bench_kernels

#include <benchmark/benchmark.h>

#include <random>

#include "vdspec/kernels.hpp"
#include "vdspec/propagator.hpp"

namespace {

using vdspec::complex;
using vdspec::vector_complex;
using vdspec::vector_real;

vector_complex random_samples(std::size_t n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  vector_complex v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

vector_real k_grid(std::size_t n) {
  vector_real k(n);
  for (std::size_t j = 0; j < n; ++j) k[j] = -2.5 + 5.0 * j / n;
  return k;
}

template <auto Kernel>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto data = random_samples(n);
  const auto factors = random_samples(n);
  for (auto _ : state) {
    Kernel(data, factors);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_SemidiscreteTransform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto nk = static_cast<std::size_t>(state.range(1));
  const auto samples = random_samples(n);
  const auto k = k_grid(nk);
  vector_complex out(nk);
  for (auto _ : state) {
    Kernel(samples, -1638.4, 0.1, k, 1.0, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_KineticStep(benchmark::State& state) {
  const auto grid = vdspec::Grid1D::centered(state.range(0), 0.1);
  vdspec::KineticStepper stepper(grid, 1.0);
  const auto init = random_samples(grid.n_points);
  std::copy(init.begin(), init.end(), stepper.state().begin());
  for (auto _ : state) stepper.step();
}

}  // namespace

BENCHMARK(BM_Multiply<vdspec::kernels::serial::multiply>)
    ->Name("multiply/serial")->Arg(32768)->Arg(1 << 20);
BENCHMARK(BM_Multiply<vdspec::kernels::omp::multiply>)
    ->Name("multiply/omp")->Arg(32768)->Arg(1 << 20);
BENCHMARK(BM_SemidiscreteTransform<vdspec::kernels::serial::semidiscrete_transform>)
    ->Name("semidiscrete_transform/serial")->Args({32768, 256})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemidiscreteTransform<vdspec::kernels::omp::semidiscrete_transform>)
    ->Name("semidiscrete_transform/omp")->Args({32768, 256})->Args({32768, 4033})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KineticStep)->Arg(32768)->Arg(65536)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
