#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cvd {

/// Index of a vertex inside one particular Graph value (0-based, contiguous).
using Vertex = std::uint32_t;

/// Identity of a vertex in the graph the computation started from. Induced
/// subgraphs keep the labels of the vertices they retain, so a label is
/// stable across deletions while a Vertex index is not.
using Label = std::uint32_t;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. Labels are strictly increasing in
/// the vertex index, so "smallest index" and "smallest label" coincide in
/// every induced subgraph.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1 labelled 0..n-1. Throws
  /// std::invalid_argument on an out-of-range endpoint, a self-loop or a
  /// duplicate edge.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return adjacency_.size() / 2; }
  bool empty() const { return labels_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// O(log deg) membership test.
  bool adjacent(Vertex u, Vertex w) const;

  Label label(Vertex v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }

  /// Index of the vertex carrying `label`, if it survives in this graph.
  std::optional<Vertex> find_label(Label label) const;

  bool contains(Vertex v) const { return v < num_vertices(); }

  /// All edges (u, w) with u < w in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep` (sorted). Vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<Label> labels_;
};

/// Ordered induced path u - v - w: uv and vw are edges, uw is not.
struct P3 {
  Vertex u;
  Vertex v;
  Vertex w;
  friend bool operator==(const P3&, const P3&) = default;
};

/// G minus `removed`. Throws std::invalid_argument if an id is not in G.
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Vertices of G that are not in `removed`, ascending.
VertexSet complement(const Graph& g, std::span<const Vertex> removed);

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);

/// Induced P3 minimizing (v, u, w) lexicographically, v being the middle.
std::optional<P3> find_p3(const Graph& g);

/// True iff G is a disjoint union of cliques. Linear time.
bool is_cluster_graph(const Graph& g);

/// True iff the component `component` of G induces a complete graph.
bool is_clique_component(const Graph& g, std::span<const Vertex> component);

/// Maps local vertex indices to the labels they carry.
std::vector<Label> to_labels(const Graph& g, std::span<const Vertex> vertices);

}  // namespace cvd
