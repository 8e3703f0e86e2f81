#pragma once

#include <cstdint>
#include <string_view>

#include "parsign/graph.hpp"
#include "parsign/signed_graph.hpp"

namespace parsign {

enum class RnaMethod { bruteforce, bnb, descent };

std::string_view method_name(RnaMethod m);

/// Minimum negative-edge count over parity signatures, with a partition
/// attaining it. For `descent` the value is a local optimum only.
struct RnaResult {
  int value = 0;
  ParityPartition witness;
  RnaMethod method = RnaMethod::bruteforce;
  std::uint64_t nodes_explored = 0;
};

/// Minimum over every parity-partition; ties go to the first one in
/// ParityPartitions order. Works on disconnected graphs too.
RnaResult rna_exact_bruteforce(const Graph& g);

/// Branch and bound. Vertices are placed by descending degree into sides
/// with capacities ceil(n/2) and floor(n/2); a node is pruned when its
/// current cut plus, for each unplaced vertex, the cheaper of its edges to
/// either side (forced if a side is full) reaches the incumbent.
RnaResult rna_exact_bnb(const Graph& g);

/// Best-improvement parity-switch descent from `start`. Each step takes the
/// swap with the largest cut decrease, ties by lowest (u, v); stops when no
/// swap decreases the cut. nodes_explored counts the swaps applied.
RnaResult rna_switch_descent(const Graph& g, const ParityPartition& start);

/// True iff no single parity-switch lowers the cut of p:
/// d(u) + d(v) <= 2 on cross edges and <= 0 on cross non-edges.
bool is_switch_optimal(const Graph& g, const ParityPartition& p);

/// Change in the cut when u in v1 and v in v2 exchange sides:
/// -(d(u) + d(v)) + 2 [uv in E].
int parity_switch_delta(const Graph& g, const ParityPartition& p, Vertex u, Vertex v);

/// ceil(n/2) * floor(n/2)
int upper_bound_trivial(int n);

/// floor(m/2 + n/4), evaluated as floor((2m + n) / 4). The bound is proven
/// for n >= 4 only; smaller n is computed but not meaningful as a theorem.
int upper_bound_main(int m, int n);

/// The star K_{1,2k-1}, whose rna number is k.
Graph graph_with_rna(int k);

}  // namespace parsign
