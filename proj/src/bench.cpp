#include "rzs/bench.h"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <thread>

#include "rzs/errors.h"

namespace rzs {

SolveResult solve_problem(const ProblemSpec& spec, const SearchConfig& cfg) {
  Position root = spec.position();
  if (spec.game == GameKind::Hex) {
    Solver<HexGame> solver(spec.hex_goal(), cfg);
    return solver.solve(root);
  }
  Solver<GoGame> solver(spec.go_goal(), cfg);
  return solver.solve(root);
}

BenchConfig BenchConfig::parse(const std::string& token) {
  BenchConfig cfg;
  cfg.name = token;
  size_t sep = token.find(':');
  std::string mode = sep == std::string::npos ? token : token.substr(0, sep);
  if (mode == "rzs") cfg.zone_pruning = true;
  else if (mode == "norzs") cfg.zone_pruning = false;
  else
    throw ParseError("bad bench config '" + token +
                     "' (expected rzs:<ordering> or norzs:<ordering>)");
  if (sep != std::string::npos) cfg.ordering_text = token.substr(sep + 1);
  return cfg;
}

BenchReport run_bench(const std::vector<std::string>& files,
                      const std::vector<BenchConfig>& configs,
                      const SearchBudget& budget, int jobs) {
  BenchReport report;
  report.configs = configs;

  std::vector<ProblemSpec> specs;
  std::vector<std::string> labels;
  for (const std::string& path : files) {
    std::string base = std::filesystem::path(path).filename().string();
    try {
      specs.push_back(load_problem_file(path, std::nullopt));
      labels.push_back(base);
    } catch (const ParseError& e) {
      report.skipped.push_back(base + ": " + e.what());
    }
  }

  struct Task {
    size_t row, col;
  };
  std::vector<Task> tasks;
  for (size_t r = 0; r < specs.size(); ++r)
    for (size_t c = 0; c < configs.size(); ++c) tasks.push_back({r, c});

  std::vector<BenchCell> cells(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      const Task& t = tasks[idx];
      const ProblemSpec& spec = specs[t.row];
      SearchConfig cfg;
      cfg.budget = budget;
      cfg.zone_pruning = configs[t.col].zone_pruning;
      cfg.ordering = MoveOrdering::parse(configs[t.col].ordering_text, spec.size);
      auto start = std::chrono::steady_clock::now();
      SolveResult res = solve_problem(spec, cfg);
      auto stop = std::chrono::steady_clock::now();
      BenchCell& cell = cells[idx];
      cell.status = res.status;
      cell.nodes = res.stats.nodes;
      cell.tt_hits = res.stats.tt_hits;
      cell.wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
    }
  };
  int workers = std::max(1, std::min<int>(jobs, (int)tasks.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (size_t r = 0; r < specs.size(); ++r) {
    BenchRow row;
    row.file = labels[r];
    for (size_t c = 0; c < configs.size(); ++c)
      row.cells.push_back(cells[r * configs.size() + c]);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_report(const BenchReport& report, bool include_wall) {
  std::ostringstream out;
  out << "rzs-bench v1\n";
  out << "configs:";
  for (const BenchConfig& c : report.configs) out << ' ' << c.name;
  out << '\n';
  out << "problems: " << report.rows.size() << '\n';
  for (const BenchRow& row : report.rows) {
    out << row.file;
    for (const BenchCell& cell : row.cells) {
      out << " | " << status_name(cell.status) << " nodes=" << cell.nodes
          << " tt=" << cell.tt_hits;
      if (include_wall) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(1);
        ms << cell.wall_ms;
        out << " time=" << ms.str() << "ms";
      }
    }
    out << '\n';
  }
  for (const std::string& s : report.skipped) out << "skipped: " << s << '\n';
  out << "solved:";
  for (size_t c = 0; c < report.configs.size(); ++c) {
    size_t solved = 0;
    for (const BenchRow& row : report.rows)
      if (row.cells[c].status != SolveStatus::Unknown) ++solved;
    out << ' ' << solved << '/' << report.rows.size();
  }
  out << '\n';
  out << "total-nodes:";
  for (size_t c = 0; c < report.configs.size(); ++c) {
    uint64_t total = 0;
    for (const BenchRow& row : report.rows) total += row.cells[c].nodes;
    out << ' ' << total;
  }
  out << '\n';
  return out.str();
}

}  // namespace rzs
