#include "cvd/hv_branch.hpp"

#include <algorithm>

#include "cvd/hv_view.hpp"

namespace cvd {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::HighDegree:
      return "high-degree";
    case Rule::PendantRing1:
      return "pendant-ring1";
    case Rule::Ring1Edge:
      return "ring1-edge";
    case Rule::EvenCycle:
      return "even-cycle";
    case Rule::EvenPath:
      return "even-path";
  }
  return "unknown";
}

namespace {

VertexSet to_set(std::span<const Vertex> xs) { return VertexSet(xs.begin(), xs.end()); }

}  // namespace

std::optional<BranchStep> next_rule(const Graph& g, Vertex pivot) {
  const HvView view = hv_probe(g, pivot);
  if (!view.is_explicit()) {
    const HvProbe& probe = view.probe();
    return BranchStep{Rule::HighDegree, {VertexSet{probe.center}, probe.neighbors}};
  }

  const HvAdjacency adj(view.edges().edges);
  if (adj.empty()) return std::nullopt;

  for (Vertex x : adj.vertices()) {
    if (view.in_ring1(x) && adj.degree(x) == 1) {
      return BranchStep{Rule::PendantRing1, {to_set(adj.neighbors(x))}};
    }
  }

  for (Vertex x : adj.vertices()) {
    if (!view.in_ring1(x)) continue;
    for (Vertex y : adj.neighbors(x)) {
      if (y > x && view.in_ring1(y)) {
        return BranchStep{Rule::Ring1Edge, {to_set(adj.neighbors(y)), to_set(adj.neighbors(x))}};
      }
    }
  }

  // What is left is a union of ring2-ring1-...-ring2 paths and alternating
  // even cycles. Components come ordered by their smallest vertex.
  const auto blocks = adj.components();
  auto split = [&](const VertexSet& block) {
    std::pair<VertexSet, VertexSet> parts;
    for (Vertex x : block) (view.in_ring1(x) ? parts.first : parts.second).push_back(x);
    return parts;
  };

  for (const auto& block : blocks) {
    const bool cycle =
        std::all_of(block.begin(), block.end(), [&](Vertex x) { return adj.degree(x) == 2; });
    if (cycle) return BranchStep{Rule::EvenCycle, {split(block).second}};
  }

  const VertexSet* longest = nullptr;
  Vertex longest_end = 0;
  for (const auto& block : blocks) {
    Vertex end = 0;
    for (Vertex x : block) {
      if (adj.degree(x) == 1) {
        end = x;
        break;
      }
    }
    if (!longest || block.size() > longest->size() ||
        (block.size() == longest->size() && end < longest_end)) {
      longest = &block;
      longest_end = end;
    }
  }
  auto [ring1_part, ring2_part] = split(*longest);
  return BranchStep{Rule::EvenPath, {std::move(ring1_part), std::move(ring2_part)}};
}

}  // namespace cvd
