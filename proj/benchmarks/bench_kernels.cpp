#include <benchmark/benchmark.h>

#include <random>

#include "bsdilate/bitwindow.hpp"
#include "bsdilate/monoid_set.hpp"
#include "bsdilate/search.hpp"

namespace {

using namespace bsd;

IntSet random_set(std::size_t k, long long window, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> d(0, window);
  std::vector<long long> vals{0};
  while (true) {
    IntSet A = IntSet::from_values(vals);
    if (A.size() >= k) return A;
    vals.push_back(d(rng));
  }
}

void BM_DilateSumVector(benchmark::State& state) {
  IntSet A = random_set(static_cast<std::size_t>(state.range(0)), 4000, 7);
  for (auto _ : state) benchmark::DoNotOptimize(dilate_sum(1, A, 3, A));
}
BENCHMARK(BM_DilateSumVector)->Arg(32)->Arg(128)->Arg(512);

void BM_DilateSumBits(benchmark::State& state) {
  IntSet A = random_set(static_cast<std::size_t>(state.range(0)), 4000, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(dilate_sum_size_bits(1, A, 3, A, 4 * 4000 + 2));
}
BENCHMARK(BM_DilateSumBits)->Arg(32)->Arg(128)->Arg(512);

void BM_ProductSet(benchmark::State& state) {
  GroupParams params(3);
  IntSet A = random_set(static_cast<std::size_t>(state.range(0)), 500, 11);
  MonoidSet S(params, {{0u, A}, {1u, A}, {2u, A}});
  for (auto _ : state) benchmark::DoNotOptimize(product_set(S, S));
}
BENCHMARK(BM_ProductSet)->Arg(16)->Arg(64);

void BM_ScanCor1(benchmark::State& state) {
  SearchSpec spec;
  spec.window = state.range(0);
  spec.k_min = 3;
  spec.k_max = 5;
  spec.require_zero = true;
  spec.canonical_dedup = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_bound(TheoremId::Cor1_6, spec));
}
BENCHMARK(BM_ScanCor1)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
