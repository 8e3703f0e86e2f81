#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <vector>

#include "parsign/families.hpp"
#include "parsign/parity_analysis.hpp"
#include "parsign/rna_solver.hpp"

namespace {

using namespace parsign;

// Random connected graph with a fixed seed per (n, density) so every solver
// sees the same instance.
Graph instance(int n, int density_percent) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(density_percent));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.insert({static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng) * 100.0 < density_percent) edges.insert({u, v});
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

void sparse_and_dense(benchmark::internal::Benchmark* b, int lo, int hi) {
  for (int n = lo; n <= hi; n += 4) {
    b->Args({n, 20});
    b->Args({n, 60});
  }
}

void BM_Bruteforce(benchmark::State& state) {
  const Graph g = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rna_exact_bruteforce(g).value);
}
BENCHMARK(BM_Bruteforce)->Apply([](auto* b) { sparse_and_dense(b, 8, 24); })->Unit(benchmark::kMicrosecond);

void BM_BranchAndBound(benchmark::State& state) {
  const Graph g = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const RnaResult r = rna_exact_bnb(g);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_BranchAndBound)->Apply([](auto* b) { sparse_and_dense(b, 8, 32); })->Unit(benchmark::kMicrosecond);

void BM_Descent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = instance(n, static_cast<int>(state.range(1)));
  const ParityPartition start = ParityPartition::from_side(n, VertexSet::range((n + 1) / 2));
  const int exact = n <= 24 ? rna_exact_bnb(g).value : -1;
  int value = 0;
  for (auto _ : state) {
    value = rna_switch_descent(g, start).value;
    benchmark::DoNotOptimize(value);
  }
  if (exact >= 0) state.counters["gap"] = value - exact;
}
BENCHMARK(BM_Descent)->Apply([](auto* b) { sparse_and_dense(b, 8, 64); })->Unit(benchmark::kMicrosecond);

void BM_Spectrum(benchmark::State& state) {
  const Graph g = instance(static_cast<int>(state.range(0)), 40);
  std::size_t size = 0;
  for (auto _ : state) {
    size = spectrum(g).values.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["values"] = static_cast<double>(size);
}
BENCHMARK(BM_Spectrum)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_CompleteGraph(benchmark::State& state) {
  const Graph k = generate({Family::complete, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(rna_exact_bnb(k).value);
}
BENCHMARK(BM_CompleteGraph)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
