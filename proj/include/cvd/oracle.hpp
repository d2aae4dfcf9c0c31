#pragma once

#include <cstddef>
#include <stdexcept>

#include "cvd/graph.hpp"

namespace cvd {

/// Raised when the brute-force oracle is asked about a graph above its size
/// guard without the override.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kOracleMaxVertices = 20;

struct OracleResult {
  std::size_t size = 0;
  VertexSet witness;  ///< lexicographically smallest minimum modulator
};

/// Minimum modulator by enumerating vertex subsets in order of size, then
/// lexicographically.
OracleResult oracle_min(const Graph& g, bool force = false);

bool oracle_decision(const Graph& g, long budget, bool force = false);

}  // namespace cvd
