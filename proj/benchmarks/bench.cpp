#include <benchmark/benchmark.h>

#include "we/coding.hpp"

namespace {

using namespace we;

void BM_WordCounter(benchmark::State& state) {
  const auto n = state.range(0);
  auto sys = random_system(1, 200, 6, 4 * n);
  std::vector<std::vector<Hit>> lists;
  for (const auto& o : sys.orbits) lists.push_back(o.hit_list());
  for (auto _ : state) {
    WordCounter wc(n);
    for (const auto& h : lists) wc.add(h);
    benchmark::DoNotOptimize(wc.count());
  }
}
BENCHMARK(BM_WordCounter)->Arg(16)->Arg(64)->Arg(256);

void BM_Enumerate(benchmark::State& state) {
  auto sys = random_system(2, 20, 3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_words(sys, state.range(0)).size());
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(8);

void BM_CountPlateau(benchmark::State& state) {
  auto spec = build_gluing(4, 4.0, 8192);
  auto fam = standard_family(4);
  for (auto _ : state) benchmark::DoNotOptimize(count_plateau(spec, fam, state.range(0)));
}
BENCHMARK(BM_CountPlateau)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_CountSample(benchmark::State& state) {
  auto spec = build_gluing(3, 3.0, 512);
  auto sys = build_glued(spec);
  auto fam = standard_family(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_sample(sys, fam, state.range(0), {}, 0));
}
BENCHMARK(BM_CountSample)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
