#include <benchmark/benchmark.h>

#include "fano3/defect.hpp"
#include "fano3/links.hpp"

static void EnumerateLinksQuartic(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = fano3::enumerate_links(3, false);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(EnumerateLinksQuartic);

static void EnumerateLinksAllGenera(benchmark::State& state) {
  for (auto _ : state) {
    for (fano3::i64 g : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
      auto rows = fano3::enumerate_links(g, false);
      benchmark::DoNotOptimize(rows);
    }
  }
}
BENCHMARK(EnumerateLinksAllGenera);

static void SearchBound(benchmark::State& state) {
  const bool quadrics = state.range(0) != 0;
  for (auto _ : state) {
    auto r = fano3::search_bound(3, quadrics);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SearchBound)->Arg(0)->Arg(1);
