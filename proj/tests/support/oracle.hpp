#pragma once

// Test-only reference computations. Deliberately naive: they walk every
// subset of the vertex set and count cut edges from the edge list, sharing
// nothing with the library's partition enumeration or bitmask cut code.

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "parsign/graph.hpp"

namespace parsign::testing {

inline bool balanced(int n, unsigned long long mask) {
  int in = 0;
  for (int v = 0; v < n; ++v) in += static_cast<int>((mask >> v) & 1ULL);
  const int diff = 2 * in - n;
  return diff >= -1 && diff <= 1;
}

inline int oracle_cut(const std::vector<Edge>& edges, unsigned long long mask) {
  int cut = 0;
  for (const Edge& e : edges) cut += static_cast<int>(((mask >> e.u) & 1ULL) != ((mask >> e.v) & 1ULL));
  return cut;
}

/// Every balanced side, counted in both orientations.
inline std::set<int> oracle_spectrum(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  std::set<int> out;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    if (balanced(n, mask)) out.insert(oracle_cut(edges, mask));
  }
  return out;
}

inline int oracle_rna(const Graph& g) { return *oracle_spectrum(g).begin(); }

/// Connected random graph: a random spanning tree plus each other pair with
/// probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))]);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace(u, v);
    }
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline std::filesystem::path corpus_file(int n) {
  return std::filesystem::path(PARSIGN_CORPUS_DIR) / ("connected_n" + std::to_string(n) + ".g6");
}

}  // namespace parsign::testing
