#pragma once

// Small graph builders and brute-force references shared by the tests. The
// references work from definitions only (triple enumeration, BFS distances,
// subset enumeration) and never call into the solver side.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "cvd/generators.hpp"
#include "cvd/graph.hpp"

namespace cvd::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, w] : edges) list.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
  return Graph::from_edges(n, list);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

/// Disjoint union; the vertices of `b` follow those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (auto [u, w] : b.edges()) edges.emplace_back(u + shift, w + shift);
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

/// K_{2,3} with parts {v=0, x=4} and {a=1, b=2, c=3}.
inline Graph k23() { return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}}); }

/// Star with center v=0 and leaves a=1, b=2, c=3.
inline Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

/// Triangle v=0, a=1, b=2 with pendant c=3 on a.
inline Graph paw() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}); }

inline Graph petersen() {
  return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

/// Labeled graph on n vertices whose edges are the set bits of `mask`,
/// pairs (i, j), i < j, numbered lexicographically.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Seeded random graph with n in [lo, hi] and p from {0.2, 0.5, 0.8}.
inline Graph random_graph(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  SplitMix64 rng(seed * 0x2545F4914F6CDD1DULL + 17);
  const std::size_t n = lo + rng.next() % (hi - lo + 1);
  const double ps[] = {0.2, 0.5, 0.8};
  return gen_gnp({n, ps[rng.next() % 3], rng.next()});
}

// ---- brute-force references ----------------------------------------------

inline bool edge(const Graph& g, Vertex u, Vertex w) {
  const auto nu = g.neighbors(u);
  return std::find(nu.begin(), nu.end(), w) != nu.end();
}

inline std::vector<P3> all_p3s(const Graph& g) {
  std::vector<P3> out;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = 0; w < n; ++w) {
        if (u != v && v != w && u != w && edge(g, u, v) && edge(g, v, w) && !edge(g, u, w)) {
          out.push_back({u, v, w});
        }
      }
    }
  }
  return out;
}

inline bool brute_is_cluster(const Graph& g) { return all_p3s(g).empty(); }

/// Whether G minus `removed` has no induced P3, by triple enumeration.
inline bool brute_is_modulator(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex x : removed) gone[x] = 1;
  for (const P3& t : all_p3s(g)) {
    if (!gone[t.u] && !gone[t.v] && !gone[t.w]) return false;
  }
  return true;
}

inline std::size_t brute_min_modulator(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    std::vector<Vertex> removed;
    for (Vertex i = 0; i < n; ++i) {
      if (mask >> i & 1) removed.push_back(i);
    }
    if (brute_is_modulator(g, removed)) best = size;
  }
  return best;
}

/// Distances from `source` by plain BFS; -1 when unreachable.
inline std::vector<int> distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

/// H_v straight from its definition: non-edges inside distance 1, edges
/// between distance 1 and distance 2.
inline std::set<Edge> reference_hv(const Graph& g, Vertex v) {
  const auto dist = distances(g, v);
  std::set<Edge> out;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const bool both_near = dist[x] == 1 && dist[y] == 1 && !edge(g, x, y);
      const bool across = ((dist[x] == 1 && dist[y] == 2) || (dist[x] == 2 && dist[y] == 1)) &&
                          edge(g, x, y);
      if (both_near || across) out.insert({x, y});
    }
  }
  return out;
}

inline std::vector<Vertex> hv_neighbors(const std::set<Edge>& hv, Vertex x) {
  std::vector<Vertex> out;
  for (auto [a, b] : hv) {
    if (a == x) out.push_back(b);
    if (b == x) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t brute_min_vertex_cover(const std::set<Edge>& edges) {
  std::vector<Vertex> pool;
  for (auto [a, b] : edges) {
    pool.push_back(a);
    pool.push_back(b);
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::size_t best = pool.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    auto in = [&](Vertex x) {
      const auto i = std::lower_bound(pool.begin(), pool.end(), x) - pool.begin();
      return (mask >> i & 1) != 0;
    };
    if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return in(e.first) || in(e.second); })) {
      best = size;
    }
  }
  return best;
}

/// Lexicographically first cover of the given size over the non-isolated
/// vertices, by combination enumeration.
inline std::vector<Vertex> brute_smallest_cover(const std::set<Edge>& edges, std::size_t size) {
  std::vector<Vertex> pool;
  for (auto [a, b] : edges) {
    pool.push_back(a);
    pool.push_back(b);
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<char> pick(pool.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
  do {
    std::vector<Vertex> chosen;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) chosen.push_back(pool[i]);
    }
    auto in = [&](Vertex x) { return std::binary_search(chosen.begin(), chosen.end(), x); };
    if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return in(e.first) || in(e.second); })) {
      return chosen;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {};
}

}  // namespace cvd::testing
