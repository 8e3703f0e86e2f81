#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parsign/graph.hpp"

namespace parsign {

inline constexpr int kMaxEnumerationOrder = 7;

/// Every connected labeled simple graph on n vertices, each exactly once.
///
/// Graphs are visited in increasing order of their edge bitmask, where bit k
/// is the k-th vertex pair in graph6 column order (0-1, 0-2, 1-2, 0-3, ...).
/// Single consumer.
class ConnectedLabeledGraphs {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= kMaxEnumerationOrder.
  explicit ConnectedLabeledGraphs(int n);

  std::optional<Graph> next();

  int order() const { return n_; }

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

}  // namespace parsign
