#include <benchmark/benchmark.h>

#include "fano3/nodal.hpp"
#include "fano3/selfcheck.hpp"

static void BurkhardtExactRank(benchmark::State& state) {
  const auto cfg = fano3::burkhardt_configuration();
  const auto m = fano3::cubic_condition_matrix(cfg);
  for (auto _ : state) {
    int r = fano3::exact_rank(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BurkhardtExactRank);

static void ControlSetFloatRank(benchmark::State& state) {
  const auto cb9 = fano3::cayley_bacharach9_configuration();
  fano3::NodalConfiguration<double> g;
  for (const auto& p : cb9.nodes)
    g.nodes.push_back({p[0].to_double(), p[1].to_double(), p[2].to_double(), p[3].to_double(),
                       p[4].to_double()});
  const auto m = fano3::cubic_condition_matrix(g);
  for (auto _ : state) {
    int r = fano3::float_rank(m, 1e-9);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ControlSetFloatRank);

static void VerifyBurkhardtNodes(benchmark::State& state) {
  const auto cfg = fano3::burkhardt_configuration();
  for (auto _ : state) {
    auto reports = fano3::verify_nodes(cfg);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(VerifyBurkhardtNodes);

static void ParseQuarticPolynomial(benchmark::State& state) {
  for (auto _ : state) {
    auto p = fano3::parse_quartic(fano3::kBurkhardtPolynomialText);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(ParseQuarticPolynomial);
