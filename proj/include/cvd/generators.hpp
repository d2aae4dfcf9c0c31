#pragma once

#include <cstddef>
#include <cstdint>

#include "cvd/graph.hpp"

namespace cvd {

/// splitmix64. Fixed so that instances are reproducible across
/// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// True with probability p: the next draw is below p * 2^64.
  bool bernoulli(double p);

 private:
  std::uint64_t state_;
};

/// c disjoint s-cliques on vertices [0, c*s), then t noise vertices. Each
/// pair (i, j), i < j, with j a noise vertex becomes an edge with
/// probability p, pairs drawn in lexicographic order.
struct PlantedSpec {
  std::size_t clusters = 0;
  std::size_t cluster_size = 0;
  std::size_t noise = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Erdos-Renyi G(n, p), pairs drawn in lexicographic order.
struct GnpSpec {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Throw std::invalid_argument when p is outside [0, 1].
Graph gen_planted(const PlantedSpec& spec);
Graph gen_gnp(const GnpSpec& spec);

}  // namespace cvd
