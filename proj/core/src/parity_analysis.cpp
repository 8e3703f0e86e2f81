#include "parsign/parity_analysis.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace parsign {

namespace {

// Next larger integer with the same popcount (Gosper). x must be non-zero.
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return ripple | (((ripple ^ x) / low) >> 2);
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void require_signature_of(const SignedGraph& s, const ParityPartition& p) {
  if (signature_from_partition(s.graph(), p) != s) {
    throw std::invalid_argument("signature does not match the parity partition");
  }
}

}  // namespace

// Even n enumerates (n/2 - 1)-subsets of vertices 1..n-1 and adds vertex 0;
// odd n enumerates (n-1)/2-subsets of all vertices.
ParityPartitions::ParityPartitions(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("partition enumeration order out of range");
  const int free_bits = n % 2 == 0 ? n - 1 : n;
  const int k = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
  all_ = VertexSet::range(free_bits).bits();
  mask_ = VertexSet::range(k).bits();
}

std::optional<ParityPartition> ParityPartitions::next() {
  if (done_) return std::nullopt;
  const std::uint64_t current = mask_;
  if (current == 0) {
    done_ = true;
  } else {
    const std::uint64_t following = next_combination(current);
    if (following > all_ || following < current) done_ = true;
    mask_ = following;
  }
  const std::uint64_t v1 = n_ % 2 == 0 ? (current << 1) | 1U : current;
  return ParityPartition::from_side(n_, VertexSet(v1));
}

std::uint64_t ParityPartitions::count(int n) {
  if (n % 2 == 0) return binomial(n, n / 2) / 2;
  return binomial(n, (n - 1) / 2);
}

std::vector<ParityPartition> parity_partitions(int n) {
  std::vector<ParityPartition> out;
  ParityPartitions gen(n);
  while (auto p = gen.next()) out.push_back(*p);
  return out;
}

Spectrum spectrum(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("spectrum requires a connected graph");
  std::set<int> values;
  ParityPartitions gen(g.order());
  while (auto p = gen.next()) values.insert(cut_size(g, p->v1()));
  return Spectrum{{values.begin(), values.end()}};
}

PartitionStats partition_stats(const Graph& g, const ParityPartition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition order does not match graph order");
  auto inside_edges = [&](VertexSet side) {
    int twice = 0;
    for (Vertex v : side) twice += std::popcount(g.adjacency()[static_cast<std::size_t>(v)] & side.bits());
    return twice / 2;
  };
  auto pairs = [](int k) { return k * (k - 1) / 2; };
  PartitionStats st;
  st.cut = cut_size(g, p.v1());
  st.x1 = pairs(p.v1().size()) - inside_edges(p.v1());
  st.x2 = pairs(p.v2().size()) - inside_edges(p.v2());
  st.y = p.v1().size() * p.v2().size() - st.cut;
  return st;
}

std::vector<int> sign_differences(const Graph& g, VertexSet v1) {
  const std::uint64_t all = g.vertices().bits();
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::uint64_t adj = g.adjacency()[static_cast<std::size_t>(v)];
    const std::uint64_t same = v1.contains(v) ? v1.bits() : (~v1.bits() & all);
    d[static_cast<std::size_t>(v)] = std::popcount(adj & ~same) - std::popcount(adj & same);
  }
  return d;
}

bool is_degree_balanced(const SignedGraph& s, const ParityPartition& p) {
  require_signature_of(s, p);
  std::vector<int> d(static_cast<std::size_t>(s.order()));
  for (Vertex v = 0; v < s.order(); ++v) d[static_cast<std::size_t>(v)] = sign_stats(s, v).d_delta;
  for (Vertex u : p.v1()) {
    for (Vertex v : p.v2()) {
      const int want = s.graph().has_edge(u, v) ? 2 : 0;
      if (d[static_cast<std::size_t>(u)] + d[static_cast<std::size_t>(v)] != want) return false;
    }
  }
  return true;
}

bool is_degree_balanced(const Graph& g, const ParityPartition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition order does not match graph order");
  const std::vector<int> d = sign_differences(g, p.v1());
  for (Vertex u : p.v1()) {
    for (Vertex v : p.v2()) {
      const int want = g.neighbors(u).contains(v) ? 2 : 0;
      if (d[static_cast<std::size_t>(u)] + d[static_cast<std::size_t>(v)] != want) return false;
    }
  }
  return true;
}

bool check_odd_identities(const Graph& g, const ParityPartition& p) {
  const int n = g.order();
  if (n % 2 == 0) throw std::invalid_argument("odd-order identities need odd n");
  if (p.order() != n) throw std::invalid_argument("partition order does not match graph order");
  if (p.v1().size() != (n - 1) / 2) throw std::invalid_argument("odd-order identities need |v1| = (n-1)/2");
  const SignedGraph s = signature_from_partition(g, p);
  int sum1 = 0;
  int sum2 = 0;
  for (Vertex v : p.v1()) sum1 += sign_stats(s, v).d_delta;
  for (Vertex v : p.v2()) sum2 += sign_stats(s, v).d_delta;
  const PartitionStats st = partition_stats(g, p);
  return sum1 == n - 1 + 2 * st.x1 - st.y && sum2 == 2 * st.x2 - st.y;
}

}  // namespace parsign
