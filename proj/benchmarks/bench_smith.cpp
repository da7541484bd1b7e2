#include <benchmark/benchmark.h>

#include <random>

#include "nilfilt/catalog.hpp"
#include "nilfilt/chain.hpp"
#include "nilfilt/homology.hpp"
#include "nilfilt/smith.hpp"

namespace {

using namespace nilfilt;

IntegerMatrix random_matrix(std::size_t n, int spread) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(-spread, spread);
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return IntegerMatrix::from_dense(a, n);
}

void BM_SmithDense(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).diagonal);
}
BENCHMARK(BM_SmithDense)->Arg(8)->Arg(16)->Arg(32);

void BM_InvariantFactors(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_InvariantFactors)->Arg(8)->Arg(32)->Arg(64);

void BM_BoundarySnf(benchmark::State& state) {
  const auto c = build_chain_complex(builtin_group("A5"), 2, Space::B, 3);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(c.boundary[2]));
}
BENCHMARK(BM_BoundarySnf);

void BM_SequenceIII(benchmark::State& state) {
  const auto g = builtin_group("SL2(8)");
  for (auto _ : state) benchmark::DoNotOptimize(tc_h1_via_sequence_III(g).value);
}
BENCHMARK(BM_SequenceIII)->Unit(benchmark::kMillisecond);

}  // namespace
