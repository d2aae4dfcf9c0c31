#include "cvd/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvd {
namespace {

bool is_connected_component(const Graph& g, std::span<const Vertex> component) {
  if (component.empty()) return false;
  std::vector<char> inside(g.num_vertices(), 0);
  for (Vertex v : component) {
    if (!g.contains(v)) return false;
    inside[v] = 1;
  }
  // Closed under adjacency and connected.
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{component.front()};
  seen[component.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex y : g.neighbors(x)) {
      if (!inside[y]) return false;
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return reached == component.size();
}

ComponentClass classify_trusted(const Graph& g, std::span<const Vertex> component) {
  if (is_clique_component(g, component)) return ComponentClass::clique();

  const Graph sub = g.induced(component);
  const auto p3 = find_p3(sub);
  // A connected non-clique always contains a P3.
  if (!p3) throw std::logic_error("classify_component: non-clique without P3");

  for (Vertex candidate : {p3->u, p3->v, p3->w}) {
    const Vertex one[] = {candidate};
    if (is_cluster_graph(delete_vertices(sub, one))) {
      return ComponentClass::fixable(component[candidate]);
    }
  }
  return ComponentClass::hard();
}

}  // namespace

ComponentClass classify_component(const Graph& g, std::span<const Vertex> component) {
  if (!std::is_sorted(component.begin(), component.end()) ||
      !is_connected_component(g, component)) {
    throw std::invalid_argument("classify_component: not a connected component");
  }
  return classify_trusted(g, component);
}

Preprocessed preprocess(const Graph& g, long budget) {
  Preprocessed out;
  VertexSet keep;
  for (const auto& block : components(g)) {
    const ComponentClass cls = classify_trusted(g, block);
    switch (cls.kind) {
      case ComponentClass::Kind::Clique:
        break;
      case ComponentClass::Kind::Fixable:
        out.deleted.push_back(g.label(cls.fix));
        break;
      case ComponentClass::Kind::Hard:
        keep.insert(keep.end(), block.begin(), block.end());
        break;
    }
  }
  std::sort(keep.begin(), keep.end());
  std::sort(out.deleted.begin(), out.deleted.end());
  out.budget = budget - static_cast<long>(out.deleted.size());
  out.graph = keep.size() == g.num_vertices() ? g : g.induced(keep);
  return out;
}

}  // namespace cvd
