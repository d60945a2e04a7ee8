#include <benchmark/benchmark.h>

#include <random>

#include "cdent/galilean.hpp"
#include "cdent/linalg.hpp"
#include "cdent/overlap.hpp"
#include "cdent/reduced_density.hpp"
#include "cdent/scenarios.hpp"

namespace {

using namespace cdent;

GaussianTerm phased_term(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GaussianTerm t = make_gaussian_term(1.0, RealVector(d), 1.0 + 0.5 * u(rng));
  for (std::size_t i = 0; i < d; ++i) {
    t.center[i] = 2.0 * u(rng);
    t.linear_phase[i] = u(rng);
  }
  t.quad_phase = 0.3 * u(rng);
  return t;
}

void BM_ClosedFormOverlap(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto d = static_cast<std::size_t>(state.range(0));
  const GaussianTerm a = phased_term(rng, d), b = phased_term(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_term_overlap(a, b));
}
BENCHMARK(BM_ClosedFormOverlap)->Arg(1)->Arg(3);

void BM_QuadratureOverlap(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto d = static_cast<std::size_t>(state.range(0));
  const GaussianSum a{d, {phased_term(rng, d)}}, b{d, {phased_term(rng, d)}};
  const QuadratureSpec spec{static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_overlap(a, b, spec));
}
BENCHMARK(BM_QuadratureOverlap)->Args({1, 64})->Args({3, 16})->Args({3, 64});

void BM_MixedOverlapMatrix(benchmark::State& state) {
  const double c = 1.0 / std::sqrt(2.0);
  const HybridState s({GaussianSum{3, {make_gaussian_term(c, {0.0, 0.0, 0.5}, 1.2)}},
                       make_hermite_mode(c, {1, 0, 2}, 1.0, {0.0, 0.0, 0.0})});
  for (auto _ : state) benchmark::DoNotOptimize(overlap_matrix(s));
}
BENCHMARK(BM_MixedOverlapMatrix);

void BM_HermitianEigen(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = u(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = Complex(u(rng), u(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen)->Arg(2)->Arg(4)->Arg(8);

void BM_ApplyGalilean(benchmark::State& state) {
  const HybridState s = beam_pair(0.6, 0.8, {0, 0, 0}, {0, 0, 1}, 1.0, 1.5);
  GalileanSampler sampler(4);
  const GalileanElement g = sampler.next();
  for (auto _ : state) benchmark::DoNotOptimize(apply_galilean(s, g));
}
BENCHMARK(BM_ApplyGalilean);

void BM_SweepQ(benchmark::State& state) {
  const auto qs = linspace(0.0, 5.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_q(0.6, 0.8, 1.0, qs));
}
BENCHMARK(BM_SweepQ);

}  // namespace

BENCHMARK_MAIN();
