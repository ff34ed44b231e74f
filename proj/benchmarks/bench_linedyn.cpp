#include <benchmark/benchmark.h>

#include <random>

#include "linedyn/homology.hpp"
#include "linedyn/multi.hpp"
#include "linedyn/single.hpp"
#include "linedyn/smith.hpp"

using namespace linedyn;

namespace {

void BM_EnumerateSelfMaps(benchmark::State& state) {
  const LineWindow w(-state.range(0), state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_continuous_selfmap(w, [&](const SelfMap&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateSelfMaps)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_WindowHomology(benchmark::State& state) {
  const LineWindow w(0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(w.poset()));
}
BENCHMARK(BM_WindowHomology)->RangeMultiplier(2)->Range(8, 64);

void BM_VietorisCheck(benchmark::State& state) {
  const LineWindow w(0, state.range(0) - 1);
  for (auto _ : state) {
    std::size_t ok = 0;
    for_each_interval_multimap(w, [&](const MultiMap& f) { ok += is_vietoris_like_multimap(f).ok; });
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_VietorisCheck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

MultiMap staircase(LineIndex hi) {
  std::vector<std::vector<LineIndex>> v;
  for (LineIndex i = 0; i <= hi; ++i) {
    const LineIndex top = std::min(hi, i == 0 ? 2 : (i % 2 != 0 ? i + 1 : i + 2));
    std::vector<LineIndex> image;
    for (LineIndex j = 0; j <= top; ++j) image.push_back(j);
    v.push_back(image);
  }
  return MultiMap(LineWindow(0, hi), v);
}

void BM_StaircaseLefschetz(benchmark::State& state) {
  const auto f = staircase(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lefschetz_number(f));
}
BENCHMARK(BM_StaircaseLefschetz)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PeriodSpectrum(benchmark::State& state) {
  const auto f = staircase(2 * state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(period_spectrum(f, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PeriodSpectrum)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
