#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/circle_calculus.hpp"
#include "disklab/factorization.hpp"
#include "disklab/minimax_lp.hpp"
#include "disklab/transitivity.hpp"

using namespace disklab;

namespace {

std::vector<DiskPoint> random_zeros(std::size_t count) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rad(0.0, 0.85);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::vector<DiskPoint> zeros;
  zeros.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    zeros.push_back(DiskPoint::from_polar_gap(ang(rng), 1.0 - rad(rng)));
  }
  return zeros;
}

}  // namespace

static void BM_BlaschkeEval(benchmark::State& state) {
  const BlaschkeProduct b(Complex(1.0, 0.0), random_zeros(state.range(0)));
  const Complex z(0.3, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(b(z));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BlaschkeEval)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_CyclicAverage(benchmark::State& state) {
  const BoundaryGrid grid(static_cast<int>(state.range(0)));
  const BoundaryFunction f =
      BoundaryFunction::sample(grid, [](Complex z) { return z * z + 0.3; });
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclic_average(f, grid.log2_size() - 2));
  }
}
BENCHMARK(BM_CyclicAverage)->DenseRange(8, 14, 2);

static void BM_OuterEval(benchmark::State& state) {
  const BoundaryGrid grid(static_cast<int>(state.range(0)));
  const BoundaryFunction logmod = BoundaryFunction::sample(
      grid, [](Complex z) { return Complex(0.5 * z.real(), 0.0); });
  const OuterFunction outer(logmod);
  const Complex z(0.6, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(outer(z));
  }
}
BENCHMARK(BM_OuterEval)->DenseRange(8, 12, 2);

static void BM_MeanValueCheck(benchmark::State& state) {
  const BoundaryGrid grid(static_cast<int>(state.range(0)));
  const DiskFunction f = DiskFunction::polynomial(
      {0.1, 0.3, -0.2, 0.05, 0.4}, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mean_value_check(f, Complex(0.5, 0.2), grid));
  }
}
BENCHMARK(BM_MeanValueCheck)->DenseRange(8, 12, 2);

static void BM_WeightMinimax(benchmark::State& state) {
  const std::size_t k = state.range(0);
  const std::size_t points = 64;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::vector<std::vector<Complex>> atoms(k, std::vector<Complex>(points));
  std::vector<Complex> target(points);
  for (auto& row : atoms) {
    for (auto& v : row) v = std::polar(1.0, ang(rng));
  }
  for (auto& v : target) v = std::polar(0.5, ang(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_max_modulus(atoms, target));
  }
}
BENCHMARK(BM_WeightMinimax)->DenseRange(2, 8, 2);

static void BM_ApplyOp(benchmark::State& state) {
  const BoundaryGrid grid(static_cast<int>(state.range(0)));
  const BlaschkeProduct b(Complex(1.0, 0.0), random_zeros(3));
  const DiskFunction f = DiskFunction::blaschke(b);
  const WeightedCompositionOp op = WeightedCompositionOp::classical(
      std::polar(1.0, 0.4), MoebiusAutomorphism::exchange({0.5, 0.1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.apply(f, grid));
  }
}
BENCHMARK(BM_ApplyOp)->DenseRange(8, 12, 2);

BENCHMARK_MAIN();
