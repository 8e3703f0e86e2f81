#include "parsign/families.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace parsign {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::complete, "complete"},
    {Family::complete_minus_e, "complete_minus_e"},
    {Family::complete_minus_2e, "complete_minus_2e"},
    {Family::complete_minus_P2, "complete_minus_P2"},
    {Family::complete_minus_triangle, "complete_minus_triangle"},
    {Family::star, "star"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::join_p2_independent, "join_p2_independent"},
    {Family::independent, "independent"},
}};

Graph complete_without(int n, std::initializer_list<Edge> removed) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool keep = true;
      for (const Edge& r : removed) keep = keep && !(r == Edge(u, v));
      if (keep) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, n] : kNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

int family_min_order(Family f) {
  switch (f) {
    case Family::complete:
    case Family::path:
    case Family::independent:
      return 1;
    case Family::complete_minus_e:
    case Family::star:
    case Family::join_p2_independent:
      return 2;
    case Family::complete_minus_P2:
    case Family::complete_minus_triangle:
    case Family::cycle:
      return 3;
    case Family::complete_minus_2e:
      return 4;
  }
  return 1;
}

Graph generate(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < family_min_order(spec.family) || n > kMaxVertices) {
    throw std::invalid_argument(std::string(family_name(spec.family)) + " requires n in [" +
                                std::to_string(family_min_order(spec.family)) + ", " + std::to_string(kMaxVertices) +
                                "], got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::complete:
      return complete_without(n, {});
    case Family::complete_minus_e:
      return complete_without(n, {{0, 1}});
    case Family::complete_minus_2e:
      return complete_without(n, {{0, 1}, {2, 3}});
    case Family::complete_minus_P2:
      return complete_without(n, {{0, 1}, {0, 2}});
    case Family::complete_minus_triangle:
      return complete_without(n, {{0, 1}, {0, 2}, {1, 2}});
    case Family::star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::path:
      for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case Family::cycle:
      for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(0, n - 1);
      break;
    case Family::join_p2_independent:
      edges.emplace_back(0, 1);
      for (int v = 2; v < n; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(1, v);
      }
      break;
    case Family::independent:
      break;
  }
  return Graph(n, edges);
}

}  // namespace parsign
