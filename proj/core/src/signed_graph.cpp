#include "parsign/signed_graph.hpp"

#include <charconv>
#include <stdexcept>

#include "parsign/graph6.hpp"

namespace parsign {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename F>
void for_each_field(std::string_view text, char sep, F&& f) {
  if (trim(text).empty()) return;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    f(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
}

std::string join(VertexSet vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ParityPartition

ParityPartition::ParityPartition(int n, VertexSet v1, VertexSet v2) : n_(n), v1_(v1), v2_(v2) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("partition order out of range");
  if (!(v1 & v2).empty()) throw std::invalid_argument("parity sets overlap");
  if ((v1 | v2) != VertexSet::range(n)) throw std::invalid_argument("parity sets do not cover the vertex set");
  const int diff = v1.size() - v2.size();
  if (diff < -1 || diff > 1) {
    throw std::invalid_argument("parity sets unbalanced: " + std::to_string(v1.size()) + " vs " +
                                std::to_string(v2.size()));
  }
}

ParityPartition ParityPartition::from_side(int n, VertexSet v1) {
  return {n, v1, VertexSet(~v1.bits()) & VertexSet::range(n)};
}

ParityPartition ParityPartition::canonical() const {
  const bool flip = n_ % 2 == 1 ? v1_.size() > v2_.size() : !v1_.contains(0);
  return flip ? swapped() : *this;
}

bool same_partition(const ParityPartition& a, const ParityPartition& b) {
  return a.order() == b.order() && (a == b || a == b.swapped());
}

ParityLabeling::ParityLabeling(std::vector<int> labels) : labels_(std::move(labels)) {
  const int n = order();
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("labeling order out of range");
  std::uint64_t seen = 0;
  for (int label : labels_) {
    if (label < 1 || label > n) throw std::invalid_argument("label " + std::to_string(label) + " outside 1..n");
    const std::uint64_t bit = std::uint64_t{1} << (label - 1);
    if (seen & bit) throw std::invalid_argument("label " + std::to_string(label) + " used twice");
    seen |= bit;
  }
}

// ---------------------------------------------------------------------------
// SignedGraph

SignedGraph::SignedGraph(Graph g) : graph_(std::move(g)), negative_(static_cast<std::size_t>(graph_.order()), 0) {}

SignedGraph::SignedGraph(Graph g, std::span<const Edge> negative) : SignedGraph(std::move(g)) {
  for (const Edge& e : negative) {
    if (e.u < 0 || e.v >= graph_.order() || !graph_.has_edge(e.u, e.v)) {
      throw std::invalid_argument("negative edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " is not an edge of the graph");
    }
    negative_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    negative_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
}

Sign SignedGraph::sign(Vertex u, Vertex v) const {
  if (!graph_.has_edge(u, v)) {
    throw std::invalid_argument(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  }
  return negative_neighbors(u).contains(v) ? Sign::negative : Sign::positive;
}

std::vector<Edge> SignedGraph::negative_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : negative_neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations

SignedGraph signature_from_partition(const Graph& g, const ParityPartition& p) {
  if (p.order() != g.order()) {
    throw std::invalid_argument("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                                std::to_string(g.order()));
  }
  // Starting from (G, +), switching at v1 makes exactly the cross edges negative.
  return switch_at_set(SignedGraph(g), p.v1());
}

ParityPartition partition_from_labeling(const ParityLabeling& f) {
  VertexSet odd;
  for (Vertex v = 0; v < f.order(); ++v) {
    if (f.label(v) % 2 == 1) odd.insert(v);
  }
  return ParityPartition::from_side(f.order(), odd);
}

std::optional<ParityPartition> recognize_parity_signature(const SignedGraph& s) {
  const Graph& g = s.graph();
  if (!is_connected(g)) throw std::invalid_argument("recognize_parity_signature requires a connected graph");
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      const int want = side[static_cast<std::size_t>(u)] ^ (s.negative_neighbors(u).contains(v) ? 1 : 0);
      int& got = side[static_cast<std::size_t>(v)];
      if (got == -1) {
        got = want;
        stack.push_back(v);
      } else if (got != want) {
        return std::nullopt;
      }
    }
  }
  VertexSet v1;
  for (Vertex v = 0; v < n; ++v) {
    if (side[static_cast<std::size_t>(v)] == 0) v1.insert(v);
  }
  const int diff = 2 * v1.size() - n;
  if (diff < -1 || diff > 1) return std::nullopt;
  return ParityPartition::from_side(n, v1);
}

SignedGraph switch_vertex(const SignedGraph& s, Vertex v) {
  check_vertex(s.order(), v);
  return switch_at_set(s, VertexSet{v});
}

SignedGraph switch_at_set(const SignedGraph& s, VertexSet vs) {
  SignedGraph out = s;
  const auto& adj = s.graph().adjacency();
  const std::uint64_t in = vs.bits() & s.graph().vertices().bits();
  for (Vertex u = 0; u < s.order(); ++u) {
    // Edge uv flips iff exactly one endpoint is in vs.
    const std::uint64_t flip = ((in >> u) & 1U) ? adj[static_cast<std::size_t>(u)] & ~in
                                                : adj[static_cast<std::size_t>(u)] & in;
    out.negative_[static_cast<std::size_t>(u)] ^= flip;
  }
  return out;
}

std::pair<SignedGraph, ParityPartition> parity_switch(const SignedGraph& s, const ParityPartition& p, Vertex u,
                                                      Vertex v) {
  check_vertex(s.order(), u);
  check_vertex(s.order(), v);
  if (!p.v1().contains(u) || !p.v2().contains(v)) {
    throw std::invalid_argument("parity switch needs u in v1 and v in v2");
  }
  if (signature_from_partition(s.graph(), p) != s) {
    throw std::invalid_argument("signature is not the one induced by the given partition");
  }
  VertexSet v1 = p.v1();
  VertexSet v2 = p.v2();
  v1.erase(u);
  v1.insert(v);
  v2.erase(v);
  v2.insert(u);
  return {switch_at_set(s, VertexSet{u, v}), ParityPartition(p.order(), v1, v2)};
}

SignStats sign_stats(const SignedGraph& s, Vertex v) {
  check_vertex(s.order(), v);
  SignStats st;
  st.d_neg = s.negative_neighbors(v).size();
  st.d_pos = s.graph().degree(v) - st.d_neg;
  st.d_delta = st.d_neg - st.d_pos;
  return st;
}

int negative_edge_count(const SignedGraph& s) {
  int twice = 0;
  for (Vertex v = 0; v < s.order(); ++v) twice += s.negative_neighbors(v).size();
  return twice / 2;
}

// ---------------------------------------------------------------------------
// Text forms

std::string format_partition(const ParityPartition& p) { return "v1=" + join(p.v1()) + ";v2=" + join(p.v2()); }

ParityPartition parse_partition(std::string_view text, int n) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("partition must look like 'v1=0,2;v2=1'");
  auto side = [&](std::string_view part, std::string_view key) {
    part = trim(part);
    if (!part.starts_with(key)) throw std::invalid_argument("expected '" + std::string(key) + "' in partition");
    VertexSet vs;
    for_each_field(part.substr(key.size()), ',', [&](std::string_view field) {
      const int v = parse_int(field);
      check_vertex(n, v);
      if (vs.contains(v)) throw std::invalid_argument("vertex listed twice in partition");
      vs.insert(v);
    });
    return vs;
  };
  return {n, side(text.substr(0, semi), "v1="), side(text.substr(semi + 1), "v2=")};
}

std::string format_signed_graph(const SignedGraph& s) {
  std::string out = write_graph6(s.graph());
  bool first = true;
  for (const Edge& e : s.negative_edges()) {
    out += first ? ' ' : ',';
    first = false;
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

SignedGraph parse_signed_graph(std::string_view text) {
  text = trim(text);
  const auto split = text.find_first_of(" \t\r\n");
  Graph g = parse_graph6(text.substr(0, split));
  std::vector<Edge> negative;
  if (split != std::string_view::npos) {
    for_each_field(text.substr(split), ',', [&](std::string_view field) {
      const auto dash = field.find('-');
      if (dash == std::string_view::npos) throw std::invalid_argument("edge must look like 'u-v': " + std::string(field));
      const int u = parse_int(trim(field.substr(0, dash)));
      const int v = parse_int(trim(field.substr(dash + 1)));
      check_vertex(g.order(), u);
      check_vertex(g.order(), v);
      if (u == v) throw std::invalid_argument("negative edge is a loop");
      negative.emplace_back(u, v);
    });
  }
  return SignedGraph(std::move(g), negative);
}

}  // namespace parsign
