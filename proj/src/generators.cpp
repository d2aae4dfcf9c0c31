#include "cvd/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cvd {

bool SplitMix64::bernoulli(double p) {
  const std::uint64_t draw = next();
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  // p * 2^64 is exact in double precision and below 2^64 here.
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  return draw < threshold;
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

}  // namespace

Graph gen_planted(const PlantedSpec& spec) {
  check_probability(spec.p);
  const std::size_t core = spec.clusters * spec.cluster_size;
  const std::size_t n = core + spec.noise;
  std::vector<Edge> edges;
  SplitMix64 rng(spec.seed);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool edge = false;
      if (j >= core) {
        edge = rng.bernoulli(spec.p);
      } else {
        edge = i / spec.cluster_size == j / spec.cluster_size;
      }
      if (edge) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_gnp(const GnpSpec& spec) {
  check_probability(spec.p);
  std::vector<Edge> edges;
  SplitMix64 rng(spec.seed);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      if (rng.bernoulli(spec.p)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(spec.n, edges);
}

}  // namespace cvd
