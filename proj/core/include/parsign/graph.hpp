#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace parsign {

using Vertex = int;

/// Largest order a Graph can hold (one 64-bit neighbor mask per vertex).
inline constexpr int kMaxVertices = 64;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Set of vertices of a graph with at most 64 vertices, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs);

  /// {0, 1, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  /// Lowest member; undefined on an empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  std::vector<Vertex> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Loops and parallel edges are rejected at construction; adjacency is kept
/// symmetric. The value is immutable once built. Connectivity is not an
/// invariant of the type.
class Graph {
 public:
  /// Edgeless graph on n vertices, 1 <= n <= kMaxVertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  /// Builds from symmetric neighbor masks; throws if asymmetric or looped.
  static Graph from_adjacency(std::span<const std::uint64_t> adjacency);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const;
  VertexSet neighbors(Vertex v) const { return VertexSet(adjacency_[static_cast<std::size_t>(v)]); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> adjacency() const { return adjacency_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> adjacency_;
  int edge_count_ = 0;
};

bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Number of edges with exactly one endpoint in `side`.
int cut_size(const Graph& g, VertexSet side);

/// "{01,02,12}"-style listing, used in diagnostics.
std::string to_string(const Graph& g);

}  // namespace parsign
