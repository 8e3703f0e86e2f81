#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parsign/graph.hpp"
#include "parsign/signed_graph.hpp"

namespace parsign {

/// Every unordered parity-partition of {0..n-1}, exactly once, canonical
/// orientation, in increasing order of the v1 bitmask.
///
/// Even n: v1 has n/2 vertices and contains vertex 0, C(n, n/2)/2 partitions.
/// Odd n: v1 is the smaller side with (n-1)/2 vertices, C(n, (n-1)/2) partitions.
class ParityPartitions {
 public:
  explicit ParityPartitions(int n);

  std::optional<ParityPartition> next();

  /// Number of partitions the enumeration will produce.
  static std::uint64_t count(int n);

 private:
  int n_;
  std::uint64_t mask_ = 0;
  std::uint64_t all_ = 0;
  bool done_ = false;
};

std::vector<ParityPartition> parity_partitions(int n);

/// Sorted set of negative-edge counts over all parity signatures.
struct Spectrum {
  std::vector<int> values;

  int min() const { return values.front(); }
  int max() const { return values.back(); }
  bool singleton() const { return values.size() == 1; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Exact spectrum by full enumeration. Throws std::invalid_argument on a
/// disconnected graph.
Spectrum spectrum(const Graph& g);

/// Non-edge counts inside and across the parity sets, and the cut.
struct PartitionStats {
  int x1 = 0;   // non-edges inside v1
  int x2 = 0;   // non-edges inside v2
  int y = 0;    // non-edges across
  int cut = 0;  // edges across

  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

PartitionStats partition_stats(const Graph& g, const ParityPartition& p);

/// For u in v1, v in v2: d_delta(u) + d_delta(v) is 2 on edges and 0 on
/// non-edges. Throws std::invalid_argument unless s is the signature of p.
bool is_degree_balanced(const SignedGraph& s, const ParityPartition& p);

/// Same test on the signature that p induces on g.
bool is_degree_balanced(const Graph& g, const ParityPartition& p);

/// Checks the two per-side sums of sign-differences for odd n:
///   sum over v1 = n - 1 + 2 x1 - y,   sum over v2 = 2 x2 - y.
/// Requires odd n and |v1| = (n-1)/2; throws std::invalid_argument otherwise.
bool check_odd_identities(const Graph& g, const ParityPartition& p);

/// Sign-difference of every vertex under the signature induced by side v1:
/// (cross degree) - (same-side degree).
std::vector<int> sign_differences(const Graph& g, VertexSet v1);

}  // namespace parsign
