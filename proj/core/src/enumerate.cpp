#include "parsign/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace parsign {

ConnectedLabeledGraphs::ConnectedLabeledGraphs(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("labeled enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                                ", got " + std::to_string(n));
  }
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedLabeledGraphs::next() {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_));
  while (mask_ < end_) {
    const std::uint64_t current = mask_++;
    // n - 1 edges are needed to connect n vertices.
    if (std::popcount(current) < n_ - 1) continue;
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if ((current >> k) & 1U) {
        adj[static_cast<std::size_t>(pairs_[k].u)] |= std::uint64_t{1} << pairs_[k].v;
        adj[static_cast<std::size_t>(pairs_[k].v)] |= std::uint64_t{1} << pairs_[k].u;
      }
    }
    Graph g = Graph::from_adjacency(adj);
    if (is_connected(g)) return g;
  }
  return std::nullopt;
}

}  // namespace parsign
