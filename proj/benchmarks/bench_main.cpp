#include <benchmark/benchmark.h>

#include <random>

#include "opprank/exactlinalg.hpp"
#include "opprank/jantzen.hpp"

using namespace opprank;

namespace {

MatrixModP random_bits(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution bit(0.5);
  MatrixModP m(2, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (bit(rng)) m.set(i, j, 1);
  return m;
}

void BM_RankMod2Packed(benchmark::State& state) {
  const MatrixModP m = random_bits(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod2_packed(m));
}
BENCHMARK(BM_RankMod2Packed)->Arg(128)->Arg(512)->Arg(1024);

void BM_RankMod2Generic(benchmark::State& state) {
  const MatrixModP m = random_bits(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p_generic(m));
}
BENCHMARK(BM_RankMod2Generic)->Arg(128)->Arg(512);

void BM_RankModPIncidence(benchmark::State& state) {
  // Points vs lines of PG(2,q): q^2+q+1 square.
  const int q = static_cast<int>(state.range(0));
  const IncidenceMatrix inc = build_incidence(GeometryProblem(parse_root_system("A2"), q, {2}));
  const MatrixModP m = MatrixModP::from_incidence(inc, static_cast<std::uint32_t>(FiniteField::of_order(q).characteristic()));
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m));
}
BENCHMARK(BM_RankModPIncidence)->Arg(7)->Arg(9)->Arg(13);

void BM_BuildIncidence(benchmark::State& state) {
  const GeometryProblem problem(parse_root_system("A3"), static_cast<int>(state.range(0)), {1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(build_incidence(problem).nrows);
}
BENCHMARK(BM_BuildIncidence)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_E6Resolve(benchmark::State& state) {
  const RootSystem rs(parse_root_system("E6"));
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(resolve_simple(rs, Weight{p - 1, 0, 0, 0, 0, 0}, p).dim);
}
BENCHMARK(BM_E6Resolve)->Arg(11)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_JantzenSumE8Steinberg(benchmark::State& state) {
  const RootSystem rs(parse_root_system("E8"));
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jantzen_sum(rs, (p - 1) * rs.rho(), p).size());
}
BENCHMARK(BM_JantzenSumE8Steinberg)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
