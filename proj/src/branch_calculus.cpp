#include "cvd/branch_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace cvd {

BranchingVector::BranchingVector(std::vector<int> drops) : drops_(std::move(drops)) {
  if (drops_.empty()) throw std::invalid_argument("branching vector must be nonempty");
  if (std::any_of(drops_.begin(), drops_.end(), [](int a) { return a < 1; })) {
    throw std::invalid_argument("branching vector entries must be positive");
  }
  std::sort(drops_.begin(), drops_.end());
}

BranchingVector BranchingVector::merged(const BranchingVector& other) const {
  std::vector<int> all = drops_;
  all.insert(all.end(), other.drops_.begin(), other.drops_.end());
  return BranchingVector(std::move(all));
}

std::string BranchingVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < drops_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(drops_[i]);
  }
  return out + ')';
}

double branching_sum(const BranchingVector& vector, double x) {
  double sum = 0.0;
  for (int a : vector.drops()) sum += std::pow(x, -a);
  return sum;
}

double branching_root(const BranchingVector& vector) {
  if (vector.size() == 1) return 1.0;
  // The sum is strictly decreasing in x, is r at x = 1 and at most 1 at x = r.
  double lo = 1.0;
  double hi = static_cast<double>(vector.size());
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (branching_sum(vector, mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

using VectorSet = std::set<BranchingVector>;

class PhaseEnumerator {
 public:
  explicit PhaseEnumerator(int min_cover) : min_cover_(min_cover) {}

  const VectorSet& at(int depth, bool skein_allowed) {
    const auto key = std::make_pair(depth, skein_allowed);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    VectorSet out;
    if (depth >= min_cover_) {
      out.insert(BranchingVector{depth});
    } else {
      // (1): one forced deletion.
      for (const auto& a : at(depth + 1, true)) out.insert(a);
      // (1,3): a high-degree vertex of degree exactly three.
      for (const auto& a : at(depth + 1, true)) {
        for (const auto& b : at(depth + 3, true)) out.insert(a.merged(b));
      }
      // (2,2): an edge inside ring 1.
      const VectorSet& twos = at(depth + 2, true);
      for (auto a = twos.begin(); a != twos.end(); ++a) {
        for (auto b = a; b != twos.end(); ++b) out.insert(a->merged(*b));
      }
      if (skein_allowed) out.insert(skein(depth));
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Independent (1,2) steps on each of the min_cover - depth seagulls: j of
  // them take the two-vertex side, in C(s, j) ways.
  BranchingVector skein(int depth) const {
    const int seagulls = min_cover_ - depth;
    std::vector<int> drops;
    long ways = 1;
    for (int j = 0; j <= seagulls; ++j) {
      for (long w = 0; w < ways; ++w) drops.push_back(depth + seagulls + j);
      ways = ways * (seagulls - j) / (j + 1);
    }
    return BranchingVector(std::move(drops));
  }

  int min_cover_;
  std::map<std::pair<int, bool>, VectorSet> memo_;
};

std::vector<RatedVector> rate(const std::vector<BranchingVector>& vectors) {
  std::vector<RatedVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back({v, branching_root(v)});
  return out;
}

}  // namespace

std::vector<BranchingVector> phase_vectors(int min_cover, bool skein_at_root) {
  if (min_cover < 1 || min_cover > 3) {
    throw std::invalid_argument("phase_vectors supports a minimum cover of 1, 2 or 3");
  }
  PhaseEnumerator enumerator(min_cover);
  const VectorSet& root = enumerator.at(0, skein_at_root);
  return {root.begin(), root.end()};
}

AnalysisReport analyze_cases() {
  AnalysisReport report;
  const BranchingVector golden{1, 2};
  report.avoid_pivot = rate({golden});
  report.unmarked = rate({golden});

  // Pivot deleted: the first step on the witness's conflict graph drops at
  // least 2 and 3 counting the pivot.
  std::vector<BranchingVector> pair;
  for (const auto& v : phase_vectors(2, false)) pair.push_back(v.merged(BranchingVector{2, 3}));
  report.pair_cover = rate(pair);

  std::vector<BranchingVector> wide;
  for (const auto& v : phase_vectors(3, false)) wide.push_back(v.merged(BranchingVector{1}));
  report.wide = rate(wide);

  for (const auto* group : {&report.avoid_pivot, &report.pair_cover, &report.wide, &report.unmarked}) {
    for (const auto& entry : *group) {
      if (entry.root > report.worst.root) report.worst = entry;
    }
  }
  return report;
}

}  // namespace cvd
