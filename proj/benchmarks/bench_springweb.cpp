#include <benchmark/benchmark.h>

#include "springweb/classify.hpp"
#include "springweb/geometry.hpp"
#include "springweb/qseries.hpp"
#include "springweb/render.hpp"
#include "springweb/verify.hpp"
#include "springweb/webs.hpp"

using namespace springweb;

static void BM_EnumerateRectangle(benchmark::State& state) {
  const auto shape = TwoColumnShape::rectangle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tableaux(shape));
}
BENCHMARK(BM_EnumerateRectangle)->DenseRange(4, 10, 2);

static void BM_WebsOfRectangle(benchmark::State& state) {
  const auto all = enumerate_tableaux(TwoColumnShape::rectangle(static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (const auto& t : all) benchmark::DoNotOptimize(web_from_tableau(t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_WebsOfRectangle)->DenseRange(4, 8, 2);

static void BM_ClassifyThreeWays(benchmark::State& state) {
  const auto all = enumerate_tableaux(TwoColumnShape::rectangle(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    for (const auto& t : all) {
      benchmark::DoNotOptimize(smooth_by_tableau_rect(t));
      benchmark::DoNotOptimize(smooth_by_web(web_from_tableau(t)));
      benchmark::DoNotOptimize(smooth_by_diagram(diagram_from_tableau(t)));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_ClassifyThreeWays)->DenseRange(4, 8, 2);

static void BM_QBinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->RangeMultiplier(2)->Range(8, 64);

static void BM_PoincareOfTree(benchmark::State& state) {
  const auto t = TwoColumnTableau::rectangular({2, 9, 10, 12, 13, 14, 15, 16});
  for (auto _ : state) benchmark::DoNotOptimize(poincare_component(t));
}
BENCHMARK(BM_PoincareOfTree);

static void BM_PatternAvoiders(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_pattern_avoiders(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PatternAvoiders)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suites(static_cast<int>(state.range(0)), "all"));
}
BENCHMARK(BM_VerifyAll)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_RenderWeb(benchmark::State& state) {
  const auto w = web_from_tableau(TwoColumnTableau::rectangular({2, 9, 10, 12, 13, 14, 15, 16}));
  for (auto _ : state) benchmark::DoNotOptimize(render_web(w));
}
BENCHMARK(BM_RenderWeb);
BENCHMARK_MAIN();
