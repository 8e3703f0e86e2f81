#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "parsign/graph.hpp"

namespace parsign {

/// Largest order supported by the single-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 string (no trailing newline). Rejects bytes outside
/// [63, 126], multi-byte order headers, n = 0, truncated or overlong bodies
/// and non-zero padding bits.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding. Throws Graph6Error when n > 62.
std::string write_graph6(const Graph& g);

/// One line of a graph6 file.
struct Graph6Line {
  std::size_t line_number = 0;  // 1-based
  std::string text;             // the graph6 token
  std::string trailer;          // anything after the first whitespace, trimmed
  Graph graph;
};

/// Streams graphs from a graph6 file: one graph per LF-terminated line, an
/// optional ">>graph6<<" prefix on the first line, blank lines skipped.
/// Parse failures are rethrown as Graph6Error naming the line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}

  std::optional<Graph6Line> next();

 private:
  std::istream* in_;
  std::size_t line_number_ = 0;
};

}  // namespace parsign
