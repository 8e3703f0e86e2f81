#include "parsign/graph6.hpp"

#include <vector>

namespace parsign {

namespace {

constexpr int kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) {
      throw Graph6Error("graph6: byte " + std::to_string(static_cast<int>(c)) + " at offset " + std::to_string(i) +
                        " outside [63, 126]");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n == kBias) throw Graph6Error("graph6: multi-byte order encoding (n > 62) is not supported");
  if (n == 0) throw Graph6Error("graph6: order 0 is not a valid graph here");

  const std::size_t expected = body_length(n);
  const std::string_view body = text.substr(1);
  if (body.size() < expected) {
    throw Graph6Error("graph6: truncated bit stream, expected " + std::to_string(expected) + " data bytes, got " +
                      std::to_string(body.size()));
  }
  if (body.size() > expected) {
    throw Graph6Error("graph6: " + std::to_string(body.size() - expected) + " trailing bytes after the bit stream");
  }

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = static_cast<unsigned char>(body[bit / 6]) - kBias;
      if ((group >> (5 - static_cast<int>(bit % 6))) & 1) {
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bit % 6 != 0) {
    const int last = static_cast<unsigned char>(body.back()) - kBias;
    const int pad_mask = (1 << (6 - static_cast<int>(bit % 6))) - 1;
    if ((last & pad_mask) != 0) throw Graph6Error("graph6: non-zero padding bits");
  }
  return Graph::from_adjacency(adj);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds the supported maximum of 62");
  }
  std::string out(1 + body_length(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((g.adjacency()[static_cast<std::size_t>(i)] >> j) & 1U) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - static_cast<int>(bit % 6))));
      }
    }
  }
  return out;
}

std::optional<Graph6Line> Graph6Reader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    if (line_number_ == 1 && view.starts_with(">>graph6<<")) view.remove_prefix(10);
    const auto start = view.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;
    view.remove_prefix(start);
    const auto split = view.find_first_of(" \t");
    const std::string_view token = view.substr(0, split);
    std::string_view trailer = split == std::string_view::npos ? std::string_view{} : view.substr(split);
    if (const auto t = trailer.find_first_not_of(" \t"); t != std::string_view::npos) {
      trailer.remove_prefix(t);
      trailer.remove_suffix(trailer.size() - trailer.find_last_not_of(" \t") - 1);
    } else {
      trailer = {};
    }
    try {
      return Graph6Line{line_number_, std::string(token), std::string(trailer), parse_graph6(token)};
    } catch (const std::exception& e) {
      throw Graph6Error("line " + std::to_string(line_number_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

}  // namespace parsign
