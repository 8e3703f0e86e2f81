#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parsign/graph.hpp"

namespace parsign {

enum class Sign : signed char { negative = -1, positive = 1 };

/// Bipartition (v1, v2) of all vertices with | |v1| - |v2| | <= 1.
///
/// The pair is ordered, but cut counts do not depend on the orientation;
/// use same_partition() to compare unordered. Enumeration and the solvers
/// emit canonical() partitions: for odd n, v1 is the smaller side; for even
/// n, v1 holds vertex 0.
class ParityPartition {
 public:
  /// Throws std::invalid_argument unless v1, v2 partition {0..n-1} with
  /// balanced sizes.
  ParityPartition(int n, VertexSet v1, VertexSet v2);

  /// v2 is the rest of {0..n-1}.
  static ParityPartition from_side(int n, VertexSet v1);

  int order() const { return n_; }
  VertexSet v1() const { return v1_; }
  VertexSet v2() const { return v2_; }

  /// Side of v: 1 or 2.
  int side_of(Vertex v) const { return v1_.contains(v) ? 1 : 2; }

  ParityPartition swapped() const { return {n_, v2_, v1_}; }
  ParityPartition canonical() const;

  friend bool operator==(const ParityPartition&, const ParityPartition&) = default;

 private:
  int n_;
  VertexSet v1_;
  VertexSet v2_;
};

/// Equality of the underlying unordered bipartitions.
bool same_partition(const ParityPartition& a, const ParityPartition& b);

/// Bijection from vertices to {1..n}; labels()[v] is the label of v.
class ParityLabeling {
 public:
  /// Throws std::invalid_argument if `labels` is not a permutation of 1..n.
  explicit ParityLabeling(std::vector<int> labels);

  int order() const { return static_cast<int>(labels_.size()); }
  int label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::span<const int> labels() const { return labels_; }

 private:
  std::vector<int> labels_;
};

struct SignStats {
  int d_neg = 0;
  int d_pos = 0;
  int d_delta = 0;  // d_neg - d_pos

  friend bool operator==(const SignStats&, const SignStats&) = default;
};

/// Graph together with an explicit sign on every edge.
///
/// Signs are kept as per-vertex negative-incidence masks, so any sequence of
/// switches can be applied and compared edge by edge.
class SignedGraph {
 public:
  /// (G, +): every edge positive.
  explicit SignedGraph(Graph g);

  /// Edges in `negative` are negative, all others positive. Throws
  /// std::invalid_argument if a listed pair is not an edge of g.
  SignedGraph(Graph g, std::span<const Edge> negative);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }

  /// Throws std::invalid_argument if uv is not an edge.
  Sign sign(Vertex u, Vertex v) const;

  VertexSet negative_neighbors(Vertex v) const { return VertexSet(negative_[static_cast<std::size_t>(v)]); }
  std::vector<Edge> negative_edges() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  friend SignedGraph switch_at_set(const SignedGraph& s, VertexSet vs);

  Graph graph_;
  std::vector<std::uint64_t> negative_;
};

/// Edge uv is negative iff u and v lie on different sides of p.
SignedGraph signature_from_partition(const Graph& g, const ParityPartition& p);

/// v1 = odd-labeled vertices, v2 = even-labeled vertices.
ParityPartition partition_from_labeling(const ParityLabeling& f);

/// A parity-partition inducing exactly the signs of s, if one exists.
///
/// Positive edges force equal sides and negative edges opposite sides; on a
/// connected graph this fixes the 2-coloring up to a swap. Vertex 0 is put in
/// v1. Throws std::invalid_argument on a disconnected graph.
std::optional<ParityPartition> recognize_parity_signature(const SignedGraph& s);

/// Negates the signs of all edges incident to v.
SignedGraph switch_vertex(const SignedGraph& s, Vertex v);

/// Flips exactly the edges with one endpoint in vs.
SignedGraph switch_at_set(const SignedGraph& s, VertexSet vs);

/// Switches at u in p.v1() and v in p.v2() and exchanges their sides.
/// Requires s == signature_from_partition(s.graph(), p); throws
/// std::invalid_argument otherwise or when u, v are not on opposite sides.
std::pair<SignedGraph, ParityPartition> parity_switch(const SignedGraph& s, const ParityPartition& p, Vertex u,
                                                      Vertex v);

SignStats sign_stats(const SignedGraph& s, Vertex v);

int negative_edge_count(const SignedGraph& s);

// Text forms used by the command line tool.

/// "v1=0,2;v2=1"
std::string format_partition(const ParityPartition& p);
ParityPartition parse_partition(std::string_view text, int n);

/// "<graph6> u-v,u-v,..." listing the negative edges; the list may be absent.
std::string format_signed_graph(const SignedGraph& s);
SignedGraph parse_signed_graph(std::string_view text);

}  // namespace parsign
