#include <gtest/gtest.h>

#include "cvd/generators.hpp"
#include "cvd/oracle.hpp"
#include "support.hpp"

namespace cvd {
namespace {

TEST(SplitMix64, ReferenceSequence) {
  // First outputs for seed 0 of the published splitmix64.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(GenPlanted, Examples) {
  EXPECT_EQ(gen_planted({2, 3, 0, 0.5, 7}),
            testing::disjoint_union(testing::complete_graph(3), testing::complete_graph(3)));
  EXPECT_EQ(gen_planted({1, 4, 1, 1.0, 1}), testing::complete_graph(5));
  const Graph noisy = gen_planted({2, 3, 2, 0.5, 42});
  EXPECT_EQ(noisy.num_vertices(), 8u);
  EXPECT_LE(oracle_min(noisy).size, 2u);
  EXPECT_THROW(gen_planted({1, 2, 1, 1.5, 0}), std::invalid_argument);
}

TEST(GenGnp, Examples) {
  EXPECT_EQ(gen_gnp({6, 0.0, 3}).num_edges(), 0u);
  EXPECT_EQ(gen_gnp({4, 1.0, 3}), testing::complete_graph(4));
  EXPECT_THROW(gen_gnp({4, -0.1, 3}), std::invalid_argument);
}

TEST(Generators, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(gen_gnp({12, 0.4, seed}), gen_gnp({12, 0.4, seed}));
    EXPECT_EQ(gen_planted({3, 4, 3, 0.3, seed}), gen_planted({3, 4, 3, 0.3, seed}));
  }
  EXPECT_NE(gen_gnp({12, 0.5, 1}), gen_gnp({12, 0.5, 2}));
}

TEST(GenPlanted, NoiseBoundsTheOptimum) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_planted({3, 4, 3, 0.5, seed});
    EXPECT_LE(oracle_min(g).size, 3u) << "seed " << seed;
  }
}

}  // namespace
}  // namespace cvd
