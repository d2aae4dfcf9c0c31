#include "cvd/solver.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cvd/hv_branch.hpp"
#include "cvd/hv_view.hpp"
#include "cvd/preprocess.hpp"

namespace cvd {

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes += other.nodes;
  leaves += other.leaves;
  max_depth = std::max(max_depth, other.max_depth);
  return *this;
}

CaseTag select_case(const Graph& g, Vertex pivot) {
  const MinVCClass cover = minvc_classify(g, pivot);
  const HvView view = hv_probe(g, pivot);
  const bool skein = view.is_explicit() && skein_size(view).has_value();
  if (skein || cover.size == MinVCClass::Size::One) return {CaseTag::Kind::AvoidPivot, 0, 0};
  if (cover.size == MinVCClass::Size::Two) {
    return {CaseTag::Kind::PairCover, cover.cover[0], cover.cover[1]};
  }
  return {CaseTag::Kind::Wide, 0, 0};
}

namespace {

Vertex choose_pivot(const Graph& g, PivotRule rule) {
  if (rule == PivotRule::MinId) return 0;
  // Highest degree inside the component of vertex 0.
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex best = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    if (g.degree(x) > g.degree(best) || (g.degree(x) == g.degree(best) && x < best)) best = x;
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return best;
}

// Depth-first search over the branching tree. Every call returns true when
// the search should stop (a solution was found and full_tree is off).
class Search {
 public:
  explicit Search(const SolverOptions& options) : options_(options) {}

  bool solve(const Graph& g, long budget) { return node(g, budget); }

  SolveOutcome outcome() const {
    SolveOutcome out;
    out.feasible = found_.has_value();
    if (found_) {
      out.modulator = *found_;
      std::sort(out.modulator.begin(), out.modulator.end());
    }
    out.stats = stats_;
    return out;
  }

 private:
  void enter() {
    ++stats_.nodes;
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, path_.size());
  }

  bool dead_end() {
    enter();
    ++stats_.leaves;
    return false;
  }

  bool accept() {
    ++stats_.leaves;
    if (!found_) found_ = path_;
    return !options_.full_tree;
  }

  // Runs `body` with `removed` appended to the current deletion path.
  template <typename Body>
  bool with_deleted(const std::vector<Label>& removed, Body&& body) {
    path_.insert(path_.end(), removed.begin(), removed.end());
    const bool stop = body();
    path_.resize(path_.size() - removed.size());
    return stop;
  }

  bool node(const Graph& g, long budget) {
    if (budget < 0) return dead_end();
    enter();
    Preprocessed pre = preprocess(g, budget);
    return with_deleted(pre.deleted, [&] {
      stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, path_.size());
      if (pre.budget < 0) {
        ++stats_.leaves;
        return false;
      }
      if (pre.graph.empty()) return accept();
      // A P3 remains and nothing may be deleted.
      if (pre.budget == 0) {
        ++stats_.leaves;
        return false;
      }
      return branch(pre.graph, pre.budget);
    });
  }

  bool branch(const Graph& g, long budget) {
    const Vertex v = choose_pivot(g, options_.pivot);
    const Label pivot = g.label(v);
    const CaseTag tag = select_case(g, v);

    if (tag.kind == CaseTag::Kind::AvoidPivot) return expand(g, pivot, budget);

    const Vertex gone[] = {v};
    const Graph without = delete_vertices(g, gone);
    const bool stop = with_deleted({pivot}, [&] {
      if (budget - 1 < 0) return dead_end();
      if (tag.kind == CaseTag::Kind::Wide) return node(without, budget - 1);
      return expand(without, pair_witness(g, without, tag), budget - 1);
    });
    if (stop) return true;
    return expand(g, pivot, budget);
  }

  // A cover vertex whose component in g - v is not a clique.
  static Label pair_witness(const Graph& g, const Graph& without, const CaseTag& tag) {
    const auto blocks = components(without);
    for (Vertex w : {tag.first, tag.second}) {
      const Vertex local = *without.find_label(g.label(w));
      for (const auto& block : blocks) {
        if (std::binary_search(block.begin(), block.end(), local)) {
          if (!is_clique_component(without, block)) return g.label(w);
          break;
        }
      }
    }
    throw std::logic_error("no cover vertex in a non-clique component");
  }

  // Runs the conflict-graph branching of `pivot` to exhaustion, then
  // continues with a full search node on what is left.
  bool expand(const Graph& g, Label pivot, long budget) {
    if (budget < 0) return dead_end();
    const Vertex v = *g.find_label(pivot);
    const auto step = next_rule(g, v);
    if (!step) return node(g, budget);
    // The conflict graph has an edge, so a P3 remains.
    if (budget == 0) return dead_end();

    enter();
    for (const VertexSet& alternative : step->alternatives) {
      const long rest = budget - static_cast<long>(alternative.size());
      const bool stop = with_deleted(to_labels(g, alternative), [&] {
        if (rest < 0) return dead_end();
        return expand(delete_vertices(g, alternative), pivot, rest);
      });
      if (stop) return true;
    }
    return false;
  }

  SolverOptions options_;
  SearchStats stats_;
  std::vector<Label> path_;
  std::optional<std::vector<Label>> found_;
};

}  // namespace

SolveOutcome solve_decision(const Graph& g, long budget, const SolverOptions& options) {
  if (budget < 0) throw std::invalid_argument("solve_decision: negative budget");
  Search search(options);
  search.solve(g, budget);
  return search.outcome();
}

SolveOutcome solve_min(const Graph& g, const SolverOptions& options) {
  SearchStats total;
  for (long budget = 0;; ++budget) {
    SolveOutcome round = solve_decision(g, budget, options);
    total += round.stats;
    if (round.feasible) {
      round.stats = total;
      return round;
    }
  }
}

}  // namespace cvd
