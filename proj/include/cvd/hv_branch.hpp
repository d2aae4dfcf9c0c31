#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

/// Greedy vertex-cover branching rules on the conflict graph H_v, in the
/// order they are tried.
enum class Rule {
  HighDegree,    ///< (x, N(x)) for a vertex of conflict degree >= 3
  PendantRing1,  ///< (N(x)) for a ring1 vertex of conflict degree 1
  Ring1Edge,     ///< (N(y), N(x)) for a conflict edge xy inside ring1
  EvenCycle,     ///< (C & ring2) for an alternating cycle C
  EvenPath,      ///< (P & ring1, P & ring2) for a longest alternating path P
};

std::string_view rule_name(Rule rule);

/// One branching step: every alternative is a vertex set to delete, the
/// parameter dropping by its size.
struct BranchStep {
  Rule rule = Rule::HighDegree;
  std::vector<VertexSet> alternatives;

  friend bool operator==(const BranchStep&, const BranchStep&) = default;
};

/// First applicable rule for the conflict graph of `pivot` in g, or nullopt
/// when that conflict graph is edgeless (the pivot's component is a
/// clique). Isolated conflict vertices are ignored. Witnesses are always
/// the smallest vertices that qualify. Throws std::invalid_argument if the
/// pivot is not in g.
std::optional<BranchStep> next_rule(const Graph& g, Vertex pivot);

}  // namespace cvd
