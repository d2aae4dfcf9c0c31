#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvd/branch_calculus.hpp"
#include "cvd/generators.hpp"
#include "cvd/io.hpp"
#include "cvd/oracle.hpp"
#include "cvd/solver.hpp"

namespace cvd::cli {
namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::uint64_t> external_ids(std::span<const Label> labels) {
  std::vector<std::uint64_t> ids;
  ids.reserve(labels.size());
  for (Label l : labels) ids.push_back(std::uint64_t{l} + 1);
  return ids;
}

Json outcome_json(const SolveOutcome& outcome, long k) {
  Json j;
  j["feasible"] = outcome.feasible;
  j["k"] = k;
  j["solution"] = external_ids(outcome.modulator);
  j["nodes"] = outcome.stats.nodes;
  j["leaves"] = outcome.stats.leaves;
  j["max_depth"] = outcome.stats.max_depth;
  return j;
}

void report_stats(std::ostream& err, const SolveOutcome& outcome, double seconds) {
  err << "nodes " << outcome.stats.nodes << "\nleaves " << outcome.stats.leaves << "\nmax_depth "
      << outcome.stats.max_depth << "\nseconds " << seconds << '\n';
}

std::string fixed10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", x);
  return buf;
}

Json rated_json(const RatedVector& entry) {
  return Json{{"vector", entry.vector.drops()}, {"root", entry.root}};
}

void print_analysis(std::ostream& out, const AnalysisReport& report, bool as_json) {
  const std::pair<const char*, const std::vector<RatedVector>*> groups[] = {
      {"avoid_pivot", &report.avoid_pivot},
      {"pair_cover", &report.pair_cover},
      {"wide", &report.wide},
      {"unmarked", &report.unmarked},
  };
  if (as_json) {
    Json cases = Json::object();
    for (const auto& [name, entries] : groups) {
      Json list = Json::array();
      for (const auto& entry : *entries) list.push_back(rated_json(entry));
      cases[name] = std::move(list);
    }
    out << Json{{"cases", cases}, {"worst", rated_json(report.worst)}}.dump() << '\n';
    return;
  }
  for (const auto& [name, entries] : groups) {
    out << name << '\n';
    for (const auto& entry : *entries) {
      out << "  " << entry.vector.to_string() << ' ' << fixed10(entry.root) << '\n';
    }
  }
  out << "worst " << report.worst.vector.to_string() << ' ' << fixed10(report.worst.root) << '\n';
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for cluster vertex deletion", "cvd"};
  app.require_subcommand(1);

  std::string input;
  std::string solution_path;
  std::string output;
  long budget = 0;
  bool full_tree = false;
  bool stats = false;
  bool force = false;
  bool as_json = false;
  PivotRule pivot = PivotRule::MinId;
  const std::map<std::string, PivotRule> pivot_names{{"min-id", PivotRule::MinId},
                                                      {"max-degree", PivotRule::MaxDegree}};

  auto* solve = app.add_subcommand("solve", "decide whether k deletions suffice");
  solve->add_option("-i,--input", input, "graph file")->required();
  solve->add_option("-k", budget, "deletion budget")->required()->check(CLI::NonNegativeNumber);
  solve->add_flag("--full-tree", full_tree, "explore the whole search tree");
  solve->add_option("--pivot", pivot, "pivot rule")
      ->transform(CLI::CheckedTransformer(pivot_names, CLI::ignore_case));
  solve->add_flag("--stats", stats, "search statistics on stderr");

  auto* min = app.add_subcommand("min", "minimum modulator");
  min->add_option("-i,--input", input, "graph file")->required();
  min->add_option("--pivot", pivot, "pivot rule")
      ->transform(CLI::CheckedTransformer(pivot_names, CLI::ignore_case));
  min->add_flag("--stats", stats, "search statistics on stderr");

  auto* verify = app.add_subcommand("verify", "check a modulator");
  verify->add_option("-i,--input", input, "graph file")->required();
  verify->add_option("-s,--solution", solution_path, "solution file")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force minimum modulator");
  oracle->add_option("-i,--input", input, "graph file")->required();
  oracle->add_flag("--force", force, "lift the size guard");

  std::string model;
  PlantedSpec planted;
  GnpSpec gnp;
  double p = 0.0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--model", model, "planted or gnp")
      ->required()
      ->check(CLI::IsMember({"planted", "gnp"}));
  gen->add_option("--clusters", planted.clusters, "cluster count");
  gen->add_option("--size", planted.cluster_size, "cluster size");
  gen->add_option("--noise", planted.noise, "noise vertex count");
  gen->add_option("--n", gnp.n, "vertex count");
  gen->add_option("-p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "PRNG seed")->required();
  gen->add_option("-o,--output", output, "output file (stdout if absent)");

  auto* analyze = app.add_subcommand("analyze", "branching-vector report");
  analyze->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  SolverOptions options;
  options.pivot = pivot;
  options.full_tree = full_tree;

  try {
    if (solve->parsed()) {
      const Graph g = load_graph(input);
      const auto start = std::chrono::steady_clock::now();
      const SolveOutcome outcome = solve_decision(g, budget, options);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      out << outcome_json(outcome, budget).dump() << '\n';
      if (stats) report_stats(err, outcome, elapsed.count());
      return outcome.feasible ? kOk : kNegative;
    }

    if (min->parsed()) {
      const Graph g = load_graph(input);
      const auto start = std::chrono::steady_clock::now();
      const SolveOutcome outcome = solve_min(g, options);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      out << outcome_json(outcome, static_cast<long>(outcome.modulator.size())).dump() << '\n';
      if (stats) report_stats(err, outcome, elapsed.count());
      return kOk;
    }

    if (verify->parsed()) {
      const Graph g = load_graph(input);
      std::ifstream in(solution_path);
      if (!in) throw InputError("cannot open " + solution_path);
      VertexSet removed;
      try {
        removed = parse_solution(in, g.num_vertices());
      } catch (const ParseError& e) {
        throw InputError(solution_path + ": " + e.what());
      }
      const bool valid = is_cluster_graph(delete_vertices(g, removed));
      out << Json{{"valid", valid}, {"size", removed.size()}}.dump() << '\n';
      return valid ? kOk : kNegative;
    }

    if (oracle->parsed()) {
      const Graph g = load_graph(input);
      const OracleResult result = oracle_min(g, force);
      out << Json{{"size", result.size}, {"solution", external_ids(to_labels(g, result.witness))}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (gen->parsed()) {
      Graph g;
      std::ostringstream header;
      if (model == "planted") {
        planted.p = p;
        planted.seed = seed;
        g = gen_planted(planted);
        header << "planted clusters=" << planted.clusters << " size=" << planted.cluster_size
               << " noise=" << planted.noise << " p=" << p << " seed=" << seed;
      } else {
        gnp.p = p;
        gnp.seed = seed;
        g = gen_gnp(gnp);
        header << "gnp n=" << gnp.n << " p=" << p << " seed=" << seed;
      }
      if (output.empty()) {
        write_graph(out, g, {header.str()});
      } else {
        std::ofstream file(output);
        if (!file) throw InputError("cannot write " + output);
        write_graph(file, g, {header.str()});
      }
      return kOk;
    }

    if (analyze->parsed()) {
      print_analysis(out, analyze_cases(), as_json);
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << " (use --force)\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cvd::cli
