#include "cvd/hv_view.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cvd {
namespace {

enum class Layer : std::uint8_t { Outside, Excluded, Pivot, Ring1, Ring2 };

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
}

// Labels every vertex with its layer relative to `pivot`.
std::vector<Layer> layer_vertices(const Graph& g, Vertex pivot, std::span<const Vertex> excluded,
                                  Neighborhoods& rings) {
  std::vector<Layer> layer(g.num_vertices(), Layer::Outside);
  for (Vertex x : excluded) {
    require_vertex(g, x);
    layer[x] = Layer::Excluded;
  }
  if (layer[pivot] == Layer::Excluded) throw std::invalid_argument("pivot is excluded");
  layer[pivot] = Layer::Pivot;
  for (Vertex x : g.neighbors(pivot)) {
    if (layer[x] == Layer::Outside) {
      layer[x] = Layer::Ring1;
      rings.ring1.push_back(x);
    }
  }
  for (Vertex x : rings.ring1) {
    for (Vertex y : g.neighbors(x)) {
      if (layer[y] == Layer::Outside) {
        layer[y] = Layer::Ring2;
        rings.ring2.push_back(y);
      }
    }
  }
  std::sort(rings.ring2.begin(), rings.ring2.end());
  return layer;
}

}  // namespace

Neighborhoods neighborhoods(const Graph& g, Vertex pivot) {
  require_vertex(g, pivot);
  Neighborhoods rings;
  layer_vertices(g, pivot, {}, rings);
  return rings;
}

bool HvView::in_ring1(Vertex x) const { return std::binary_search(ring1.begin(), ring1.end(), x); }
bool HvView::in_ring2(Vertex x) const { return std::binary_search(ring2.begin(), ring2.end(), x); }

HvView hv_probe(const Graph& g, Vertex pivot) { return hv_probe(g, pivot, {}); }

HvView hv_probe(const Graph& g, Vertex pivot, std::span<const Vertex> excluded) {
  require_vertex(g, pivot);
  Neighborhoods rings;
  const std::vector<Layer> layer = layer_vertices(g, pivot, excluded, rings);
  const std::size_t ring1_size = rings.ring1.size();

  // Conflict degree from the ring1/ring2 neighbor counts: a ring1 vertex
  // conflicts with its ring1 non-neighbors and its ring2 neighbors, a ring2
  // vertex with its ring1 neighbors.
  std::vector<std::size_t> to_ring1(g.num_vertices(), 0);
  std::vector<std::size_t> to_ring2(g.num_vertices(), 0);
  auto count = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      to_ring1[x] += layer[y] == Layer::Ring1;
      to_ring2[x] += layer[y] == Layer::Ring2;
    }
  };
  for (Vertex x : rings.ring1) count(x);
  for (Vertex x : rings.ring2) count(x);

  std::optional<Vertex> heavy;
  for (Vertex x = 0; x < g.num_vertices() && !heavy; ++x) {
    std::size_t deg = 0;
    if (layer[x] == Layer::Ring1) {
      deg = (ring1_size - 1 - to_ring1[x]) + to_ring2[x];
    } else if (layer[x] == Layer::Ring2) {
      deg = to_ring1[x];
    } else {
      continue;
    }
    if (deg >= 3) heavy = x;
  }

  HvView view{pivot, std::move(rings.ring1), std::move(rings.ring2), HvEdges{}};
  std::vector<char> mark(g.num_vertices(), 0);

  if (heavy) {
    HvProbe probe{*heavy, {}};
    const Vertex w = *heavy;
    if (layer[w] == Layer::Ring1) {
      for (Vertex y : g.neighbors(w)) {
        mark[y] = 1;
        if (layer[y] == Layer::Ring2) probe.neighbors.push_back(y);
      }
      for (Vertex y : view.ring1) {
        if (y != w && !mark[y]) probe.neighbors.push_back(y);
      }
    } else {
      for (Vertex y : g.neighbors(w)) {
        if (layer[y] == Layer::Ring1) probe.neighbors.push_back(y);
      }
    }
    std::sort(probe.neighbors.begin(), probe.neighbors.end());
    view.content = std::move(probe);
    return view;
  }

  // Every ring1 vertex misses at most two ring1 vertices here, so scanning
  // ring1 once per ring1 vertex is bounded by the edges of G[ring1].
  HvEdges out;
  for (Vertex x : view.ring1) {
    for (Vertex y : g.neighbors(x)) mark[y] = 1;
    for (Vertex y : view.ring1) {
      if (y > x && !mark[y]) out.edges.emplace_back(x, y);
    }
    for (Vertex y : g.neighbors(x)) {
      mark[y] = 0;
      if (layer[y] == Layer::Ring2) out.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  view.content = std::move(out);
  return view;
}

HvAdjacency::HvAdjacency(std::span<const Edge> edges) {
  for (const auto& [x, y] : edges) {
    vertices_.push_back(x);
    vertices_.push_back(y);
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  std::vector<std::size_t> degree(vertices_.size(), 0);
  for (const auto& [x, y] : edges) {
    ++degree[slot(x)];
    ++degree[slot(y)];
  }
  offsets_.assign(vertices_.size() + 1, 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [x, y] : edges) {
    adjacency_[fill[slot(x)]++] = y;
    adjacency_[fill[slot(y)]++] = x;
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
}

std::size_t HvAdjacency::slot(Vertex x) const {
  return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), x) -
                                  vertices_.begin());
}

std::span<const Vertex> HvAdjacency::neighbors(Vertex x) const {
  const std::size_t i = slot(x);
  if (i == vertices_.size() || vertices_[i] != x) return {};
  return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
}

std::vector<VertexSet> HvAdjacency::components() const {
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<VertexSet> out;
  for (std::size_t start = 0; start < vertices_.size(); ++start) {
    if (seen[start]) continue;
    VertexSet block;
    std::vector<Vertex> stack{vertices_[start]};
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (Vertex y : neighbors(x)) {
        if (!seen[slot(y)]) {
          seen[slot(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

namespace {

// Exact minimum vertex cover of a graph of maximum degree 2: a path on l
// vertices needs floor(l/2), a cycle on l vertices ceil(l/2).
std::size_t paths_and_cycles_cover(const HvAdjacency& adj) {
  std::size_t total = 0;
  for (const auto& block : adj.components()) {
    const bool cycle = std::all_of(block.begin(), block.end(),
                                   [&](Vertex x) { return adj.degree(x) == 2; });
    total += cycle ? (block.size() + 1) / 2 : block.size() / 2;
  }
  return total;
}

// First cover of the given size in lexicographic order; the graph has at
// most eight non-isolated vertices when this is called.
VertexSet smallest_cover(const HvAdjacency& adj, std::span<const Edge> edges, std::size_t size) {
  const VertexSet& pool = adj.vertices();
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    VertexSet chosen;
    for (std::size_t i : pick) chosen.push_back(pool[i]);
    const bool covers = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
      return std::binary_search(chosen.begin(), chosen.end(), e.first) ||
             std::binary_search(chosen.begin(), chosen.end(), e.second);
    });
    if (covers) return chosen;
    // Advance to the next combination.
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == pool.size() - size + i - 1) --i;
    if (i == 0) throw std::logic_error("no cover of the computed minimum size");
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

MinVCClass minvc_classify(const Graph& g, Vertex pivot) {
  constexpr std::size_t kLimit = 2;
  VertexSet forced;
  while (true) {
    const HvView view = hv_probe(g, pivot, forced);
    if (!view.is_explicit()) {
      // A vertex of degree >= 3 belongs to every cover of size <= 2.
      if (forced.size() == kLimit) return {MinVCClass::Size::AtLeastThree, {}};
      forced.push_back(view.probe().center);
      continue;
    }
    const auto& edges = view.edges().edges;
    if (forced.empty() && edges.empty()) {
      throw std::invalid_argument("minvc_classify: conflict graph has no edge");
    }
    const HvAdjacency adj(edges);
    const std::size_t rest = paths_and_cycles_cover(adj);
    if (forced.size() + rest > kLimit) return {MinVCClass::Size::AtLeastThree, {}};

    VertexSet cover = forced;
    if (rest > 0) {
      const VertexSet extra = smallest_cover(adj, edges, rest);
      cover.insert(cover.end(), extra.begin(), extra.end());
    }
    std::sort(cover.begin(), cover.end());
    const auto size = cover.size() == 1 ? MinVCClass::Size::One : MinVCClass::Size::Two;
    return {size, std::move(cover)};
  }
}

std::optional<std::size_t> skein_size(const HvView& view) {
  if (!view.is_explicit()) throw std::invalid_argument("skein_size needs an explicit view");
  const HvAdjacency adj(view.edges().edges);
  std::size_t seagulls = 0;
  for (const auto& block : adj.components()) {
    if (block.size() != 3) return std::nullopt;
    std::size_t middles = 0;
    for (Vertex x : block) {
      if (adj.degree(x) == 2 && view.in_ring1(x)) {
        ++middles;
      } else if (!(adj.degree(x) == 1 && view.in_ring2(x))) {
        return std::nullopt;
      }
    }
    if (middles != 1) return std::nullopt;
    ++seagulls;
  }
  if (seagulls == 0) return std::nullopt;
  return seagulls;
}

}  // namespace cvd
