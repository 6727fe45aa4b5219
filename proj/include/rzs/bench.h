#pragma once

#include <string>
#include <vector>

#include "rzs/sgf.h"
#include "rzs/solver.h"

namespace rzs {

// One search run on one problem under one configuration.
SolveResult solve_problem(const ProblemSpec& spec, const SearchConfig& cfg);

// A bench configuration: "rzs:<ordering>" or "norzs:<ordering>", where
// <ordering> is lex, liberty, or file:<path>. The ordering text is kept
// unparsed because priority files bind to a board size.
struct BenchConfig {
  std::string name;
  bool zone_pruning = true;
  std::string ordering_text = "liberty";

  static BenchConfig parse(const std::string& token);
};

struct BenchCell {
  SolveStatus status = SolveStatus::Unknown;
  uint64_t nodes = 0;
  uint64_t tt_hits = 0;
  double wall_ms = 0;
};

struct BenchRow {
  std::string file;  // basename, the report's row label
  std::vector<BenchCell> cells;
};

struct BenchReport {
  std::vector<BenchConfig> configs;
  std::vector<BenchRow> rows;
  std::vector<std::string> skipped;  // "file: reason" for unparsable inputs
};

// Solves every parsable problem in `files` under every configuration.
// Problems run in row order (sorted by the caller); `jobs` > 1 farms
// independent solves out to a thread pool, with results assembled in task
// order so output is deterministic.
BenchReport run_bench(const std::vector<std::string>& files,
                      const std::vector<BenchConfig>& configs,
                      const SearchBudget& budget, int jobs = 1);

// Report text. Wall times vary run to run, so they are only included when
// `include_wall` is set (console output); report files omit them and are
// byte-identical across runs.
std::string render_report(const BenchReport& report, bool include_wall);

}  // namespace rzs
