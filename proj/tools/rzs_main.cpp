#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rzs/bench.h"
#include "rzs/errors.h"
#include "rzs/proof_io.h"
#include "rzs/sgf.h"
#include "rzs/solver.h"

namespace {

using namespace rzs;

int exit_code_for(SolveStatus s) {
  return s == SolveStatus::Unknown ? 2 : 0;
}

std::string goal_text_for(const ProblemSpec& spec) {
  if (spec.game == GameKind::Hex) return goal_text_hex(spec.hex_goal());
  return goal_text_go(spec.go_goal());
}

int run_solve(const std::string& file, std::optional<std::string> rules,
              uint64_t max_nodes, int max_depth, const std::string& ordering,
              bool no_rzs, const std::string& pass_and,
              const std::string& proof_out) {
  std::optional<GameKind> kind;
  if (rules) kind = parse_game_kind(*rules);
  std::vector<std::string> warnings;
  ProblemSpec spec = load_problem_file(file, kind, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';

  SearchConfig cfg;
  cfg.budget.max_nodes = max_nodes;
  cfg.budget.max_depth = max_depth;
  cfg.ordering = MoveOrdering::parse(ordering, spec.size);
  cfg.zone_pruning = !no_rzs;
  if (pass_and == "on") cfg.and_player_may_pass = true;
  else if (pass_and == "off") cfg.and_player_may_pass = false;
  else throw ParseError("--pass-and takes on or off");

  SolveResult res = solve_problem(spec, cfg);

  Position root = spec.position();
  std::cout << "game: " << game_kind_name(spec.game) << "  goal: "
            << goal_text_for(spec) << "  to-move: "
            << color_char(root.to_move()) << '\n';
  std::cout << root.pretty(res.status == SolveStatus::Win ? &res.rz : nullptr);

  if (!proof_out.empty()) {
    ProofDocument doc;
    doc.game = spec.game;
    doc.size = spec.size;
    doc.goal_text = goal_text_for(spec);
    doc.pass_and = cfg.and_player_may_pass;
    doc.pass_or = cfg.or_player_may_pass;
    doc.zone_pruning = cfg.zone_pruning;
    doc.ordering = cfg.ordering.describe();
    doc.max_nodes = cfg.budget.max_nodes;
    doc.max_depth = cfg.budget.max_depth;
    doc.result = res.status;
    doc.stats = res.stats;
    doc.repetition_caveat = res.repetition_caveat;
    doc.root = root;
    doc.rz = res.rz;
    doc.tree = res.tree;
    std::ofstream out(proof_out, std::ios::binary);
    if (!out) throw ParseError("cannot write proof file: " + proof_out);
    out << write_proof(doc);
    std::cerr << "proof written to " << proof_out << '\n';
  }

  std::cout << status_name(res.status) << " nodes=" << res.stats.nodes
            << " rz_size=" << res.rz.count();
  if (res.repetition_caveat) std::cout << " caveat=repetition";
  std::cout << '\n';
  return exit_code_for(res.status);
}

int run_bench(const std::string& dir, const std::string& configs_text,
              const std::string& report_path, uint64_t max_nodes, int jobs) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end(),
            [](const std::string& a, const std::string& b) {
              return fs::path(a).filename().string() <
                     fs::path(b).filename().string();
            });
  if (files.empty()) throw ParseError("no problem files in " + dir);

  std::vector<BenchConfig> configs;
  std::string token;
  std::istringstream ss(configs_text);
  while (std::getline(ss, token, ','))
    if (!token.empty()) configs.push_back(BenchConfig::parse(token));
  if (configs.empty()) throw ParseError("no bench configurations given");

  SearchBudget budget;
  budget.max_nodes = max_nodes;
  BenchReport report = rzs::run_bench(files, configs, budget, jobs);

  std::cout << render_report(report, /*include_wall=*/true);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw ParseError("cannot write report file: " + report_path);
    out << render_report(report, /*include_wall=*/false);
    std::cerr << "report written to " << report_path << '\n';
  }
  return report.skipped.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relevance-zone goal solver for go and hex problems"};
  app.require_subcommand(1);

  std::string file, rules, ordering = "liberty", pass_and = "on";
  std::string proof_out;
  uint64_t max_nodes = 500000;
  int max_depth = 0;
  bool no_rzs = false;

  CLI::App* solve = app.add_subcommand("solve", "solve one problem file");
  solve->add_option("file", file, "problem file (SGF or hex text)")->required();
  solve->add_option("--rules", rules, "go, killall, or hex (default: sniffed)");
  solve->add_option("--max-nodes", max_nodes, "node budget (default 500000)");
  solve->add_option("--max-depth", max_depth, "depth budget (0 = unlimited)");
  solve->add_option("--ordering", ordering, "lex, liberty, or file:<path>");
  solve->add_flag("--no-rzs", no_rzs, "disable must-play zone pruning");
  solve->add_option("--pass-and", pass_and, "allow defender-side pass: on|off");
  solve->add_option("--proof-out", proof_out, "write the proof file here");

  std::string dir, configs = "rzs:liberty,norzs:liberty", report_path;
  uint64_t bench_nodes = 500000;
  int jobs = 1;
  CLI::App* bench = app.add_subcommand("bench", "solve a directory of problems");
  bench->add_option("dir", dir, "directory of problem files")->required();
  bench->add_option("--configs", configs,
                    "comma-separated rzs:<ordering>|norzs:<ordering> list");
  bench->add_option("--report", report_path, "write the comparison table here");
  bench->add_option("--max-nodes", bench_nodes, "node budget per solve");
  bench->add_option("--jobs", jobs, "parallel solves (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      std::optional<std::string> rules_opt;
      if (!rules.empty()) rules_opt = rules;
      return run_solve(file, rules_opt, max_nodes, max_depth, ordering, no_rzs,
                       pass_and, proof_out);
    }
    return run_bench(dir, configs, report_path, bench_nodes, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
