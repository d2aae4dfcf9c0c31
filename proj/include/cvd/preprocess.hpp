#pragma once

#include <span>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

/// How far a connected component is from being a clique.
struct ComponentClass {
  enum class Kind { Clique, Fixable, Hard };
  Kind kind = Kind::Hard;
  /// The single vertex whose deletion leaves a cluster graph (Fixable only).
  Vertex fix = 0;

  static ComponentClass clique() { return {Kind::Clique, 0}; }
  static ComponentClass fixable(Vertex w) { return {Kind::Fixable, w}; }
  static ComponentClass hard() { return {Kind::Hard, 0}; }

  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// Classifies the connected component `component` (sorted) of `g`.
///
/// For a non-clique the first P3 (u, v, w) of the component is located and
/// u, v, w are tried as single deletions in that order. Throws
/// std::invalid_argument if `component` is not a connected component of g.
ComponentClass classify_component(const Graph& g, std::span<const Vertex> component);

struct Preprocessed {
  Graph graph;               ///< union of the Hard components of the input
  long budget = 0;           ///< input budget minus |deleted|, may be negative
  std::vector<Label> deleted;  ///< labels of greedily deleted vertices, ascending
};

/// Drops clique components and resolves one-deletion components greedily.
/// Every component of the returned graph needs at least two deletions.
Preprocessed preprocess(const Graph& g, long budget);

}  // namespace cvd
