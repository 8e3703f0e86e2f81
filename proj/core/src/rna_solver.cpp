#include "parsign/rna_solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "parsign/families.hpp"
#include "parsign/parity_analysis.hpp"

namespace parsign {

std::string_view method_name(RnaMethod m) {
  switch (m) {
    case RnaMethod::bruteforce:
      return "bruteforce";
    case RnaMethod::bnb:
      return "bnb";
    case RnaMethod::descent:
      return "descent";
  }
  return "unknown";
}

RnaResult rna_exact_bruteforce(const Graph& g) {
  ParityPartitions gen(g.order());
  auto first = gen.next();
  RnaResult best{cut_size(g, first->v1()), *first, RnaMethod::bruteforce, 1};
  while (auto p = gen.next()) {
    ++best.nodes_explored;
    const int cut = cut_size(g, p->v1());
    if (cut < best.value) {
      best.value = cut;
      best.witness = *p;
    }
  }
  return best;
}

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g), n_(g.order()), order_(static_cast<std::size_t>(n_)) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  RnaResult run() {
    const int cap_a = (n_ + 1) / 2;
    const int cap_b = n_ / 2;
    best_ = std::numeric_limits<int>::max();
    // Equal capacities make the sides interchangeable: pin the first vertex to A.
    const std::uint64_t first = std::uint64_t{1} << order_[0];
    const std::uint64_t unplaced = g_.vertices().bits() & ~first;
    search(1, first, 0, cap_a - 1, cap_b, 0, unplaced);
    if (cap_a != cap_b && cap_b > 0) search(1, 0, first, cap_a, cap_b - 1, 0, unplaced);
    return RnaResult{best_, ParityPartition::from_side(n_, VertexSet(best_a_)).canonical(), RnaMethod::bnb, nodes_};
  }

 private:
  int bound(std::uint64_t a, std::uint64_t b, int cap_a, int cap_b, int cut, std::uint64_t unplaced) const {
    int lb = cut;
    for (Vertex v : VertexSet(unplaced)) {
      const std::uint64_t adj = g_.adjacency()[static_cast<std::size_t>(v)];
      const int to_a = std::popcount(adj & a);
      const int to_b = std::popcount(adj & b);
      // Joining A costs the edges to B and vice versa.
      if (cap_a == 0) {
        lb += to_a;
      } else if (cap_b == 0) {
        lb += to_b;
      } else {
        lb += std::min(to_a, to_b);
      }
    }
    return lb;
  }

  void search(std::size_t depth, std::uint64_t a, std::uint64_t b, int cap_a, int cap_b, int cut,
              std::uint64_t unplaced) {
    ++nodes_;
    if (depth == order_.size()) {
      if (cut < best_) {
        best_ = cut;
        best_a_ = a;
      }
      return;
    }
    if (bound(a, b, cap_a, cap_b, cut, unplaced) >= best_) return;

    const Vertex v = order_[depth];
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t adj = g_.adjacency()[static_cast<std::size_t>(v)];
    const int cost_a = std::popcount(adj & b);
    const int cost_b = std::popcount(adj & a);
    const std::uint64_t rest = unplaced & ~bit;
    // Cheaper side first so the first leaf is a greedy solution; A on ties.
    const bool a_first = cost_a <= cost_b;
    for (int attempt = 0; attempt < 2; ++attempt) {
      const bool to_a = (attempt == 0) == a_first;
      if (to_a && cap_a > 0) {
        search(depth + 1, a | bit, b, cap_a - 1, cap_b, cut + cost_a, rest);
      } else if (!to_a && cap_b > 0) {
        search(depth + 1, a, b | bit, cap_a, cap_b - 1, cut + cost_b, rest);
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> order_;
  int best_ = 0;
  std::uint64_t best_a_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

RnaResult rna_exact_bnb(const Graph& g) { return BranchAndBound(g).run(); }

int parity_switch_delta(const Graph& g, const ParityPartition& p, Vertex u, Vertex v) {
  const std::vector<int> d = sign_differences(g, p.v1());
  return -(d[static_cast<std::size_t>(u)] + d[static_cast<std::size_t>(v)]) + (g.has_edge(u, v) ? 2 : 0);
}

bool is_switch_optimal(const Graph& g, const ParityPartition& p) {
  const std::vector<int> d = sign_differences(g, p.v1());
  for (Vertex u : p.v1()) {
    for (Vertex v : p.v2()) {
      const int limit = g.has_edge(u, v) ? 2 : 0;
      if (d[static_cast<std::size_t>(u)] + d[static_cast<std::size_t>(v)] > limit) return false;
    }
  }
  return true;
}

RnaResult rna_switch_descent(const Graph& g, const ParityPartition& start) {
  if (start.order() != g.order()) throw std::invalid_argument("start partition order does not match graph order");
  VertexSet v1 = start.v1();
  VertexSet v2 = start.v2();
  int cut = cut_size(g, v1);
  std::uint64_t steps = 0;
  while (true) {
    const std::vector<int> d = sign_differences(g, v1);
    int best_delta = 0;
    Vertex best_u = -1;
    Vertex best_v = -1;
    for (Vertex u : v1) {
      for (Vertex v : v2) {
        const int delta = -(d[static_cast<std::size_t>(u)] + d[static_cast<std::size_t>(v)]) +
                          (g.neighbors(u).contains(v) ? 2 : 0);
        if (delta < best_delta) {
          best_delta = delta;
          best_u = u;
          best_v = v;
        }
      }
    }
    if (best_u < 0) break;
    v1.erase(best_u);
    v1.insert(best_v);
    v2.erase(best_v);
    v2.insert(best_u);
    cut += best_delta;
    ++steps;
  }
  return RnaResult{cut, ParityPartition(g.order(), v1, v2), RnaMethod::descent, steps};
}

int upper_bound_trivial(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  return ((n + 1) / 2) * (n / 2);
}

int upper_bound_main(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("edge and vertex counts must be non-negative");
  return (2 * m + n) / 4;
}

Graph graph_with_rna(int k) {
  if (k < 1) throw std::invalid_argument("graph_with_rna needs k >= 1");
  return generate({Family::star, 2 * k});
}

}  // namespace parsign
