#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace cvd {

/// Parameter drops of the subcases of one branching step, kept sorted.
class BranchingVector {
 public:
  /// Throws std::invalid_argument if `drops` is empty or has an entry < 1.
  explicit BranchingVector(std::vector<int> drops);
  BranchingVector(std::initializer_list<int> drops) : BranchingVector(std::vector<int>(drops)) {}

  const std::vector<int>& drops() const { return drops_; }
  std::size_t size() const { return drops_.size(); }

  /// Multiset union.
  BranchingVector merged(const BranchingVector& other) const;

  /// "(1,3,3,4,4,5)"
  std::string to_string() const;

  friend auto operator<=>(const BranchingVector&, const BranchingVector&) = default;

 private:
  std::vector<int> drops_;
};

/// Branching number: the largest positive root of sum_i x^(-a_i) = 1,
/// bisected on [1, r] to 1e-12. A single-alternative vector gives 1.
double branching_root(const BranchingVector& vector);

/// sum_i x^(-a_i); equals 1 at the branching number.
double branching_sum(const BranchingVector& vector, double x);

/// Summary vectors of the marked part of a conflict-graph branching whose
/// conflict graph needs a cover of at least `min_cover` vertices.
///
/// The branching is modelled by the steps (1), (1,3), (2,2) and the skein
/// steps: at deleted count d < min_cover a skein has at least
/// min_cover - d seagulls, which are branched on independently with (1,2)
/// each. `skein_at_root` toggles the skein step at the root only.
/// Supports min_cover in {1, 2, 3}.
std::vector<BranchingVector> phase_vectors(int min_cover, bool skein_at_root);

struct RatedVector {
  BranchingVector vector;
  double root = 0.0;
};

struct AnalysisReport {
  std::vector<RatedVector> avoid_pivot;  ///< pivot kept, cover 1 or skein
  std::vector<RatedVector> pair_cover;   ///< cover of size two
  std::vector<RatedVector> wide;         ///< cover of size three or more
  std::vector<RatedVector> unmarked;     ///< steps after the marked phase
  RatedVector worst{BranchingVector{1}, 1.0};
};

/// Per-case branching vectors of the whole solver and the worst of them.
AnalysisReport analyze_cases();

}  // namespace cvd
