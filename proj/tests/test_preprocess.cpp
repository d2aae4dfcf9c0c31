#include <gtest/gtest.h>

#include "cvd/oracle.hpp"
#include "cvd/preprocess.hpp"
#include "support.hpp"

namespace cvd {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::disjoint_union;
using testing::path_graph;

VertexSet all_vertices(const Graph& g) { return complement(g, {}); }

TEST(ClassifyComponent, Examples) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(classify_component(k4, all_vertices(k4)), ComponentClass::clique());
  // Path 0-1-2-3: the first P3 is (0,1,2); deleting 0 leaves a P3, deleting 1 does not.
  const Graph p4 = path_graph(4);
  EXPECT_EQ(classify_component(p4, all_vertices(p4)), ComponentClass::fixable(1));
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(classify_component(c4, all_vertices(c4)), ComponentClass::hard());
}

TEST(ClassifyComponent, RejectsNonComponents) {
  const Graph g = disjoint_union(path_graph(3), complete_graph(2));
  const VertexSet partial{0, 1};
  EXPECT_THROW(classify_component(g, partial), std::invalid_argument);
  const VertexSet two_blocks{0, 1, 2, 3, 4};
  EXPECT_THROW(classify_component(g, two_blocks), std::invalid_argument);
  const VertexSet block{3, 4};
  EXPECT_EQ(classify_component(g, block), ComponentClass::clique());
}

TEST(Preprocess, Examples) {
  const auto cliques = preprocess(disjoint_union(complete_graph(3), complete_graph(5)), 2);
  EXPECT_TRUE(cliques.graph.empty());
  EXPECT_EQ(cliques.budget, 2);
  EXPECT_TRUE(cliques.deleted.empty());

  const auto mixed = preprocess(disjoint_union(path_graph(4), complete_graph(3)), 3);
  EXPECT_TRUE(mixed.graph.empty());
  EXPECT_EQ(mixed.budget, 2);
  EXPECT_EQ(mixed.deleted, (std::vector<Label>{1}));

  const auto c4 = preprocess(cycle_graph(4), 1);
  EXPECT_EQ(c4.graph, cycle_graph(4));
  EXPECT_EQ(c4.budget, 1);
  EXPECT_TRUE(c4.deleted.empty());
}

TEST(Preprocess, BudgetMayGoNegative) {
  const auto out = preprocess(disjoint_union(path_graph(3), path_graph(3)), 1);
  EXPECT_EQ(out.budget, -1);
  EXPECT_EQ(out.deleted.size(), 2u);
}

TEST(Preprocess, SurvivorsNeedTwoDeletions) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = testing::random_graph(seed, 3, 10);
    const auto out = preprocess(g, 100);
    for (const auto& block : components(out.graph)) {
      const Graph sub = out.graph.induced(block);
      for (Vertex x = 0; x < sub.num_vertices(); ++x) {
        const VertexSet one{x};
        EXPECT_FALSE(is_cluster_graph(delete_vertices(sub, one))) << "seed " << seed;
      }
    }
  }
}

TEST(Preprocess, PreservesOptimum) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = testing::random_graph(seed, 2, 7);
    const auto out = preprocess(g, 100);
    EXPECT_EQ(oracle_min(g).size, out.deleted.size() + oracle_min(out.graph).size) << "seed " << seed;
  }
}

}  // namespace
}  // namespace cvd
