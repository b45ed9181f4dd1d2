#include <random>

#include <benchmark/benchmark.h>

#include "quotcoh/complex.hpp"
#include "quotcoh/lie.hpp"
#include "quotcoh/matrix.hpp"
#include "quotcoh/torus.hpp"
#include "quotcoh/witness.hpp"

using namespace quotcoh;

static Matrix random_square(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Rational(num(rng), den(rng));
  return m;
}

static void BM_Rank(benchmark::State &state) {
  const Matrix m = random_square(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

static void BM_AbelianBetti(benchmark::State &state) {
  const LieAlgebra g = abelian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(betti(ce_complex(g)));
}
BENCHMARK(BM_AbelianBetti)->Arg(4)->Arg(6)->Arg(8);

static void BM_Sl2Betti(benchmark::State &state) {
  const LieAlgebra g = sl2();
  for (auto _ : state)
    benchmark::DoNotOptimize(betti(ce_complex(g)));
}
BENCHMARK(BM_Sl2Betti);

static void BM_TorusAudit(benchmark::State &state) {
  TorusSpec spec;
  spec.n = static_cast<std::size_t>(state.range(0));
  std::vector<ExtScalar> dir(spec.n);
  dir[0] = ExtScalar{1};
  dir[1] = ExtScalar{0, 1};
  spec.foliation_dirs = {dir};
  spec.truncation = 3;
  for (auto _ : state)
    benchmark::DoNotOptimize(torus_betti(spec));
}
BENCHMARK(BM_TorusAudit)->Arg(3)->Arg(4)->Arg(5);

static void BM_WitnessBounds(benchmark::State &state) {
  const auto family = witness::build_bumps(2, 8, 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(witness::verify_bounds(family));
}
BENCHMARK(BM_WitnessBounds)->Arg(1001)->Arg(10001);
BENCHMARK_MAIN();
