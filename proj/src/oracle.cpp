#include "cvd/oracle.hpp"

#include <numeric>
#include <string>

namespace cvd {

OracleResult oracle_min(const Graph& g, bool force) {
  const std::size_t n = g.num_vertices();
  if (n > kOracleMaxVertices && !force) {
    throw OracleLimitError("oracle refuses " + std::to_string(n) + " vertices (limit " +
                           std::to_string(kOracleMaxVertices) + ")");
  }
  for (std::size_t size = 0; size <= n; ++size) {
    VertexSet subset(size);
    std::iota(subset.begin(), subset.end(), Vertex{0});
    while (true) {
      if (is_cluster_graph(delete_vertices(g, subset))) return {size, subset};
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  // Deleting everything always works, so the loop returns.
  return {n, VertexSet{}};
}

bool oracle_decision(const Graph& g, long budget, bool force) {
  if (budget < 0) return false;
  return oracle_min(g, force).size <= static_cast<std::size_t>(budget);
}

}  // namespace cvd
