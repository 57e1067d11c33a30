#include <benchmark/benchmark.h>

#include <vector>

#include "oscillator/bargmann_space.hpp"
#include "oscillator/orbifold_geometry.hpp"
#include "oscillator/quadrature.hpp"

using namespace oscillator;

static void BM_GaussLaguerre(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(n));
}
BENCHMARK(BM_GaussLaguerre)->Arg(8)->Arg(21)->Arg(33);

static void BM_InnerProductQuadrature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> c(n + 1, Complex(1.0, -0.5));
  const HolomorphicState s(c, n);
  const QuadratureSpec spec = QuadratureSpec::for_degree(n);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product_quadrature(s, s, spec));
}
BENCHMARK(BM_InnerProductQuadrature)->Arg(12)->Arg(20)->Arg(32);

static void BM_GramMatrix12(benchmark::State& state) {
  std::vector<HolomorphicState> basis;
  for (std::size_t n = 0; n <= 12; ++n) basis.push_back(HolomorphicState::basis(n, 12));
  const QuadratureSpec spec = QuadratureSpec::for_degree(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_matrix(basis, spec, Normalization::monomial));
  }
}
BENCHMARK(BM_GramMatrix12);

static void BM_Evolve(benchmark::State& state) {
  const HolomorphicState s(std::vector<Complex>(33, Complex(0.1, 0.2)), 32);
  const OscillatorParams p;
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(s, tau, p));
    tau += 1e-3;
  }
}
BENCHMARK(BM_Evolve);

static void BM_CoveringConjugation(benchmark::State& state) {
  const ConeSpace cone(ConeIndex::integer(static_cast<std::size_t>(state.range(0))));
  const OscillatorParams p;
  const Complex z(0.6, 0.7);
  double tau = 0.0;
  for (auto _ : state) {
    const Complex lhs = covering_map(exact_flow(PhasePoint(z), tau, p).z(), cone);
    const Complex rhs = cone_flow(covering_map(z, cone), tau, 1.0, cone.index());
    benchmark::DoNotOptimize(lhs - rhs);
    tau += 1e-3;
  }
}
BENCHMARK(BM_CoveringConjugation)->Arg(3)->Arg(8);

BENCHMARK_MAIN();
