#include <benchmark/benchmark.h>

#include "modknot/enumeration.hpp"
#include "modknot/statistics.hpp"
#include "modknot/symbols.hpp"
#include "modknot/winding.hpp"

using namespace modknot;

static void BM_EnumerateClasses(benchmark::State& state) {
  EnumerationParams p;
  p.trace_bound = state.range(0);
  p.worker_count = static_cast<int>(state.range(1));
  std::size_t n = 0;
  for (auto _ : state) {
    auto rs = enumerate_classes(p);
    n = rs.size();
    benchmark::DoNotOptimize(rs);
  }
  state.counters["classes"] = static_cast<double>(n);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_EnumerateClasses)
    ->Args({100, 1})
    ->Args({400, 1})
    ->Args({1000, 1})
    ->Args({1000, 4})
    ->Args({1000, 8})
    ->Unit(benchmark::kMillisecond);

static void BM_BruteForceOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_classes(state.range(0)));
}
BENCHMARK(BM_BruteForceOracle)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_PsiClosedForm(benchmark::State& state) {
  EnumerationParams p;
  p.trace_bound = state.range(0);
  const auto rs = enumerate_classes(p);
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& r : rs) acc += psi(r.rep);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rs.size()));
}
BENCHMARK(BM_PsiClosedForm)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_DedekindSum(benchmark::State& state) {
  Integer a = 1, b = 1;
  for (int i = 0; i < state.range(0); ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(a, b));
}
BENCHMARK(BM_DedekindSum)->Arg(20)->Arg(200);

static void BM_WindingPsi(benchmark::State& state) {
  EnumerationParams p;
  p.trace_bound = state.range(0);
  const auto rs = enumerate_classes(p);
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& r : rs) acc += winding_psi(r.rep);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rs.size()));
}
BENCHMARK(BM_WindingPsi)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_CauchyReport(benchmark::State& state) {
  const std::vector<double> edges{-1.0, 0.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cauchy_cdf_compare(static_cast<double>(state.range(0)), edges));
  }
}
BENCHMARK(BM_CauchyReport)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
