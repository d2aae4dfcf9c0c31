#include "cvd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cvd {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, w] : edges) {
    if (u >= n || w >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(w));
    }
    if (u == w) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[w];
  }

  Graph g;
  g.labels_.resize(n);
  std::iota(g.labels_.begin(), g.labels_.end(), Label{0});
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);

  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, w] : edges) {
    g.adjacency_[fill[u]++] = w;
    g.adjacency_[fill[w]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex w) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), w);
}

std::optional<Vertex> Graph::find_label(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex w : neighbors(u)) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  constexpr Vertex kGone = ~Vertex{0};
  // Small subsets (single components) are remapped by binary search so the
  // cost stays proportional to the subset, not to the whole graph.
  const bool sparse = keep.size() * 16 < num_vertices();
  std::vector<Vertex> remap;
  if (!sparse) {
    remap.assign(num_vertices(), kGone);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<Vertex>(i);
  }
  auto position = [&](Vertex x) -> Vertex {
    if (!sparse) return remap[x];
    auto it = std::lower_bound(keep.begin(), keep.end(), x);
    return it != keep.end() && *it == x ? static_cast<Vertex>(it - keep.begin()) : kGone;
  };

  Graph g;
  g.labels_.reserve(keep.size());
  g.offsets_.reserve(keep.size() + 1);
  for (Vertex old : keep) {
    g.labels_.push_back(labels_[old]);
    // Neighbor lists stay sorted because the remap is monotone.
    for (Vertex x : neighbors(old)) {
      if (Vertex y = position(x); y != kGone) g.adjacency_.push_back(y);
    }
    g.offsets_.push_back(g.adjacency_.size());
  }
  return g;
}

VertexSet complement(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    gone[v] = 1;
  }
  VertexSet keep;
  keep.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return keep;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  return g.induced(complement(g, removed));
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet block;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

std::optional<P3> find_p3(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // stamp[x] == v + 1 marks x as a member of N[v]; scratch stamps N(u).
  std::vector<std::size_t> stamp(n, 0);
  std::vector<std::size_t> scratch(n, 0);
  std::size_t scratch_round = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(v);
    if (deg < 2) continue;
    stamp[v] = v + 1;
    for (Vertex x : g.neighbors(v)) stamp[x] = v + 1;
    for (Vertex u : g.neighbors(v)) {
      // u sees all of N[v] \ {u} iff it has deg(v) marked neighbors.
      std::size_t seen = 0;
      if (g.degree(u) >= deg) {
        for (Vertex x : g.neighbors(u)) seen += stamp[x] == v + 1;
      }
      if (seen == deg) continue;
      ++scratch_round;
      for (Vertex x : g.neighbors(u)) scratch[x] = scratch_round;
      for (Vertex w : g.neighbors(v)) {
        if (w != u && scratch[w] != scratch_round) return P3{u, v, w};
      }
    }
  }
  return std::nullopt;
}

bool is_clique_component(const Graph& g, std::span<const Vertex> component) {
  return std::all_of(component.begin(), component.end(),
                     [&](Vertex x) { return g.degree(x) + 1 == component.size(); });
}

bool is_cluster_graph(const Graph& g) {
  for (const auto& block : components(g)) {
    if (!is_clique_component(g, block)) return false;
  }
  return true;
}

std::vector<Label> to_labels(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Label> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(g.label(v));
  return out;
}

}  // namespace cvd
