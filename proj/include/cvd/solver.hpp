#pragma once

#include <cstdint>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

enum class PivotRule {
  MinId,      ///< smallest vertex of the first component
  MaxDegree,  ///< highest-degree vertex of the first component, smallest on ties
};

struct SolverOptions {
  PivotRule pivot = PivotRule::MinId;
  /// Explore the entire search tree instead of stopping at the first
  /// solution. The reported modulator is still the first one found.
  bool full_tree = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t max_depth = 0;  ///< most vertices deleted along one path

  SearchStats& operator+=(const SearchStats& other);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SolveOutcome {
  bool feasible = false;
  std::vector<Label> modulator;  ///< ascending labels; empty when infeasible
  SearchStats stats;
};

/// Which branching the solver applies at a pivot.
struct CaseTag {
  enum class Kind {
    /// min cover 1 or a skein: some solution avoids the pivot
    AvoidPivot,
    /// min cover {first, second}, not a 2-skein
    PairCover,
    /// min cover >= 3, not a skein
    Wide,
  };
  Kind kind = Kind::Wide;
  Vertex first = 0;
  Vertex second = 0;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// Requires the conflict graph of `pivot` to have an edge (true for every
/// vertex of a component that survived preprocessing); throws
/// std::invalid_argument otherwise.
CaseTag select_case(const Graph& g, Vertex pivot);

/// Is there a modulator of at most `budget` vertices?
SolveOutcome solve_decision(const Graph& g, long budget, const SolverOptions& options = {});

/// Minimum modulator by iterative deepening on the budget. Stats are summed
/// over all rounds.
SolveOutcome solve_min(const Graph& g, const SolverOptions& options = {});

}  // namespace cvd
