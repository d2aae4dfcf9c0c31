#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

// The conflict graph H_v of a pivot v lives on the vertices at distance one
// (ring 1) and two (ring 2) from v. Its edges are the non-adjacent pairs
// inside ring 1 plus the G-edges between ring 1 and ring 2; equivalently,
// the pairs {x, y} such that x, y and v form an induced P3 of G.

struct Neighborhoods {
  VertexSet ring1;  ///< N(v)
  VertexSet ring2;  ///< N(N[v])
};

Neighborhoods neighborhoods(const Graph& g, Vertex pivot);

/// A vertex of conflict degree at least 3 together with its conflict
/// neighbors. Returned instead of the full edge list when one exists,
/// since the full H_v can then be superlinear in the size of G.
struct HvProbe {
  Vertex center = 0;
  VertexSet neighbors;
  friend bool operator==(const HvProbe&, const HvProbe&) = default;
};

/// Full edge list of an H_v whose maximum degree is at most 2.
struct HvEdges {
  std::vector<Edge> edges;  ///< (x, y) with x < y, lexicographic
  friend bool operator==(const HvEdges&, const HvEdges&) = default;
};

struct HvView {
  Vertex pivot = 0;
  VertexSet ring1;
  VertexSet ring2;
  std::variant<HvEdges, HvProbe> content;

  bool is_explicit() const { return std::holds_alternative<HvEdges>(content); }
  const HvEdges& edges() const { return std::get<HvEdges>(content); }
  const HvProbe& probe() const { return std::get<HvProbe>(content); }

  bool in_ring1(Vertex x) const;
  bool in_ring2(Vertex x) const;
};

/// Linear-time construction: a probe on the smallest vertex of conflict
/// degree >= 3 if there is one, the explicit edge list otherwise.
HvView hv_probe(const Graph& g, Vertex pivot);

/// Same, with the vertices of `excluded` treated as deleted from g.
HvView hv_probe(const Graph& g, Vertex pivot, std::span<const Vertex> excluded);

/// Adjacency of an explicit H_v, indexed over its non-isolated vertices.
class HvAdjacency {
 public:
  explicit HvAdjacency(std::span<const Edge> edges);

  /// Non-isolated vertices, ascending.
  const VertexSet& vertices() const { return vertices_; }
  std::span<const Vertex> neighbors(Vertex x) const;
  std::size_t degree(Vertex x) const { return neighbors(x).size(); }
  bool empty() const { return vertices_.empty(); }

  /// Components over the non-isolated vertices, ordered by smallest member.
  std::vector<VertexSet> components() const;

 private:
  std::size_t slot(Vertex x) const;

  VertexSet vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Minimum vertex cover size of H_v, resolved only up to "three or more".
struct MinVCClass {
  enum class Size { One, Two, AtLeastThree };
  Size size = Size::AtLeastThree;
  VertexSet cover;  ///< lexicographically smallest minimum cover, for One/Two

  friend bool operator==(const MinVCClass&, const MinVCClass&) = default;
};

/// Throws std::invalid_argument when H_v has no edge.
MinVCClass minvc_classify(const Graph& g, Vertex pivot);

/// Number of seagulls if H_v is a disjoint union of seagulls (a path
/// ring2 - ring1 - ring2) plus isolated vertices, nullopt otherwise.
/// Throws std::invalid_argument on a probe view.
std::optional<std::size_t> skein_size(const HvView& view);

}  // namespace cvd
