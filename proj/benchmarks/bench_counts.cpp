#include <benchmark/benchmark.h>

#include "nilfilt/catalog.hpp"
#include "nilfilt/chain.hpp"
#include "nilfilt/homspace.hpp"

namespace {

using namespace nilfilt;

void BM_CountHom(benchmark::State& state, const char* name, int q) {
  const auto g = builtin_group(name);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_hom(g, n, q));
}
BENCHMARK_CAPTURE(BM_CountHom, A5_q2, "A5", 2)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_CountHom, S4_q3, "S4", 3)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_CountHom, SL2_8_q2, "SL2(8)", 2)->DenseRange(2, 4);

void BM_CountHomParallel(benchmark::State& state) {
  const auto g = builtin_group("SL2(8)");
  CountOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_hom(g, 4, 2, {}, opt));
}
BENCHMARK(BM_CountHomParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_ChainComplex(benchmark::State& state) {
  const auto g = builtin_group("A5");
  for (auto _ : state) benchmark::DoNotOptimize(build_chain_complex(g, 2, Space::B, 3).sizes);
}
BENCHMARK(BM_ChainComplex);

}  // namespace
