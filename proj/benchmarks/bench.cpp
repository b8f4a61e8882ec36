#include <benchmark/benchmark.h>

#include "shifted/ds_string.hpp"
#include "shifted/enumerate.hpp"
#include "shifted/graph.hpp"
#include "shifted/graphical.hpp"
#include "shifted/harness.hpp"
#include "shifted/shifted_order.hpp"
#include "shifted/threshold.hpp"

namespace {

shifted::Graph path_graph(int n) {
  shifted::Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

void BM_RecognizeThreshold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t total = shifted::graph_count(n);
  for (auto _ : state) {
    std::uint64_t threshold_graphs = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
      threshold_graphs +=
          shifted::is_threshold(shifted::graph_from_edge_mask(n, mask)) ? 1 : 0;
    benchmark::DoNotOptimize(threshold_graphs);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(total));
}
BENCHMARK(BM_RecognizeThreshold)->Arg(4)->Arg(5)->Arg(6);

void BM_IndependenceComplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t total = shifted::graph_count(n);
  for (auto _ : state) {
    std::size_t facets = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
      facets += shifted::independence_complex(shifted::graph_from_edge_mask(n, mask))
                    .facet_count();
    benchmark::DoNotOptimize(facets);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(total));
}
BENCHMARK(BM_IndependenceComplex)->Arg(4)->Arg(5);

void BM_DominanceComplex(benchmark::State& state) {
  const shifted::Graph g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto k = shifted::dominance_complex(g);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_DominanceComplex)->DenseRange(5, 9, 2);

void BM_FindShiftedLabeling(benchmark::State& state) {
  // The 8 vertex, 15 facet evaluation of DDSS|SSD|S: a positive instance
  // that exercises the pruned search.
  const shifted::SimplicialComplex k = shifted::evaluate(shifted::parse_ds("DDSS|SSD|S"));
  for (auto _ : state) {
    auto labeling = shifted::find_shifted_labeling(k);
    benchmark::DoNotOptimize(labeling);
  }
}
BENCHMARK(BM_FindShiftedLabeling);

void BM_FindShiftedLabelingNegative(benchmark::State& state) {
  const shifted::SimplicialComplex k =
      shifted::edge_complex(path_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto labeling = shifted::find_shifted_labeling(k);
    benchmark::DoNotOptimize(labeling);
  }
}
BENCHMARK(BM_FindShiftedLabelingNegative)->Arg(6)->Arg(8);

void BM_EvaluateString(benchmark::State& state) {
  const shifted::DsString s = shifted::parse_ds("DDSS|SSD|S");
  for (auto _ : state) {
    auto k = shifted::evaluate(s);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_EvaluateString);

void BM_VerifyCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  shifted::Graph g(n);  // a staircase: vertex v joined to all before it when v is even
  for (int v = 2; v <= n; v += 2)
    for (int u = 1; u < v; ++u) g.add_edge(u, v);
  const shifted::ThresholdCertificate cert = shifted::certify(g);
  for (auto _ : state) {
    bool ok = shifted::verify_certificate(g, cert);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_VerifyCertificate)->Arg(12)->Arg(16);

void BM_TheoremSweep(benchmark::State& state) {
  for (auto _ : state) {
    auto report = shifted::run_theorem(shifted::TheoremId::T7, 4);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_TheoremSweep);

}  // namespace

BENCHMARK_MAIN();
