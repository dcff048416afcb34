#include <benchmark/benchmark.h>

#include "goldbachkit/goldbach.hpp"
#include "goldbachkit/mangoldt.hpp"
#include "goldbachkit/zeros.hpp"

namespace {

const gbk::MangoldtTable& shared_table() {
  static const gbk::MangoldtTable t = gbk::build_mangoldt(1 << 16);
  return t;
}

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gbk::build_mangoldt(state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sieve)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity(benchmark::oN);

void BM_GkDirect(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gbk::gk_direct(shared_table(), k, state.range(1)));
}
BENCHMARK(BM_GkDirect)->ArgsProduct({{2, 3}, {1024, 4096, 8192}})->Unit(benchmark::kMillisecond);

void BM_GkFft(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gbk::gk_fft(shared_table(), k, state.range(1)));
}
BENCHMARK(BM_GkFft)->ArgsProduct({{2, 3, 4}, {1024, 4096, 16384, 65536}})->Unit(benchmark::kMillisecond);

// Cost is linear in the number of zeros, so this mostly measures complex arithmetic.
void BM_HkZeroSum(benchmark::State& state) {
  static const gbk::ZeroTable zeros = gbk::load_zeros_file(GBK_ZERO_FILE);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gbk::hk_zero_sum(zeros, k, 1e6));
}
BENCHMARK(BM_HkZeroSum)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
