#include "cvd/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string_view>
#include <unordered_set>

namespace cvd {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

bool parse_uint(std::string_view word, std::size_t& value) {
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line ? at_line(line, what) : what), kind_(kind), line_(line) {}

Graph parse_graph(std::istream& in) {
  using K = ParseError::Kind;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto words = split_words(raw);
    if (words.empty() || words[0] == "c") continue;

    if (words[0] == "p") {
      if (have_header) throw ParseError(K::MalformedHeader, line_no, "second header");
      if (words.size() != 4 || words[1] != "edge" || !parse_uint(words[2], n) ||
          !parse_uint(words[3], m)) {
        throw ParseError(K::MalformedHeader, line_no, "expected 'p edge <n> <m>'");
      }
      have_header = true;
      edges.reserve(m);
      continue;
    }

    if (words[0] == "e") {
      if (!have_header) throw ParseError(K::MissingHeader, line_no, "edge before header");
      std::size_t u = 0;
      std::size_t w = 0;
      if (words.size() != 3 || !parse_uint(words[1], u) || !parse_uint(words[2], w)) {
        throw ParseError(K::MalformedLine, line_no, "expected 'e <u> <v>'");
      }
      if (u < 1 || u > n || w < 1 || w > n) {
        throw ParseError(K::EndpointOutOfRange, line_no,
                         "endpoint out of range 1.." + std::to_string(n));
      }
      if (u == w) throw ParseError(K::SelfLoop, line_no, "self-loop at " + std::to_string(u));
      const Vertex a = static_cast<Vertex>(std::min(u, w) - 1);
      const Vertex b = static_cast<Vertex>(std::max(u, w) - 1);
      if (!seen.insert((std::uint64_t{a} << 32) | b).second) {
        throw ParseError(K::DuplicateEdge, line_no,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(w));
      }
      edges.emplace_back(a, b);
      continue;
    }

    throw ParseError(K::MalformedLine, line_no, "unknown line type '" + std::string(words[0]) + "'");
  }

  if (!have_header) throw ParseError(K::MissingHeader, 0, "missing 'p edge' header");
  if (edges.size() != m) {
    throw ParseError(K::EdgeCountMismatch, 0,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& comment : comments) out << "c " << comment << '\n';
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, w] : g.edges()) out << "e " << u + 1 << ' ' << w + 1 << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

VertexSet parse_solution(std::istream& in, std::size_t n) {
  using K = ParseError::Kind;
  VertexSet out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    for (auto word : split_words(raw)) {
      std::size_t id = 0;
      if (!parse_uint(word, id) || id < 1 || id > n) {
        throw ParseError(K::BadVertexId, line_no, "bad vertex id '" + std::string(word) + "'");
      }
      out.push_back(static_cast<Vertex>(id - 1));
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ParseError(K::BadVertexId, 0, "repeated vertex id in solution");
  }
  return out;
}

}  // namespace cvd
