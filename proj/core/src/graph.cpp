#include "parsign/graph.hpp"

#include <stdexcept>

namespace parsign {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex out of range: " + std::to_string(v));
    insert(v);
  }
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                                std::to_string(n));
  }
  adjacency_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (has_edge(e.u, e.v)) {
      throw std::invalid_argument("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adjacency_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adjacency_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    ++edge_count_;
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_adjacency(std::span<const std::uint64_t> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  Graph g(n);
  const std::uint64_t all = VertexSet::range(n).bits();
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = adjacency[static_cast<std::size_t>(v)];
    if ((row & ~all) != 0) throw std::invalid_argument("neighbor mask exceeds vertex range");
    if ((row >> v) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    for (Vertex u : VertexSet(row)) {
      if (((adjacency[static_cast<std::size_t>(u)] >> v) & 1U) == 0) {
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
      }
    }
    g.adjacency_[static_cast<std::size_t>(v)] = row;
    degree_sum += std::popcount(row);
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    // Neighbors above u only.
    const std::uint64_t upper = adjacency_[static_cast<std::size_t>(u)] & ~VertexSet::range(u + 1).bits();
    for (Vertex v : VertexSet(upper)) out.emplace_back(u, v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.adjacency()[static_cast<std::size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices().bits();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::range(n).bits();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[static_cast<std::size_t>(v)] = ~g.adjacency()[static_cast<std::size_t>(v)] & all & ~(std::uint64_t{1} << v);
  }
  return Graph::from_adjacency(adj);
}

int cut_size(const Graph& g, VertexSet side) {
  const std::uint64_t other = ~side.bits() & g.vertices().bits();
  int cut = 0;
  for (Vertex v : side) cut += std::popcount(g.adjacency()[static_cast<std::size_t>(v)] & other);
  return cut;
}

std::string to_string(const Graph& g) {
  std::string out = "{";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  out += '}';
  return out;
}

}  // namespace parsign
