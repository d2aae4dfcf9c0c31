#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedHeader,
    MissingHeader,
    MalformedLine,
    EndpointOutOfRange,
    SelfLoop,
    DuplicateEdge,
    EdgeCountMismatch,
    BadVertexId,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  /// 1-based line number, 0 when the error is not tied to one line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Reads the text graph format:
///
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>        (m times, 1 <= u, v <= n, u != v, no repeats)
///
/// External ids are 1-based; vertex i of the result is external id i + 1.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);

/// Canonical form: header, then edges with u < v in lexicographic order.
/// Labels are ignored; vertex i is written as i + 1.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
std::string graph_to_string(const Graph& g);

/// Whitespace-separated 1-based ids, converted to 0-based vertices of a
/// graph with `n` vertices. Duplicates are rejected.
VertexSet parse_solution(std::istream& in, std::size_t n);

}  // namespace cvd
