#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rzs/bench.h"
#include "rzs/proof_io.h"
#include "rzs/replay.h"
#include "rzs/sgf.h"

namespace py = pybind11;
using namespace rzs;

namespace {

ProblemSpec spec_from_text(const std::string& text,
                           const std::optional<std::string>& rules,
                           std::vector<std::string>* warnings) {
  std::optional<GameKind> kind;
  if (rules) kind = parse_game_kind(*rules);
  size_t first = text.find_first_not_of(" \t\r\n");
  bool looks_sgf = first != std::string::npos && text[first] == '(';
  if (kind && *kind == GameKind::Hex) {
    return problem_from_hex(parse_hex_problem(text));
  }
  if (!looks_sgf && !kind) return problem_from_hex(parse_hex_problem(text));
  ProblemSpec spec = parse_sgf(text, warnings);
  if (kind) spec.game = *kind;
  return spec;
}

std::string goal_text_for(const ProblemSpec& spec) {
  if (spec.game == GameKind::Hex) return goal_text_hex(spec.hex_goal());
  return goal_text_go(spec.go_goal());
}

py::dict solve_text(const std::string& text, std::optional<std::string> rules,
                    uint64_t max_nodes, int max_depth,
                    const std::string& ordering, bool rzs, bool pass_and) {
  std::vector<std::string> warnings;
  ProblemSpec spec = spec_from_text(text, rules, &warnings);
  SearchConfig cfg;
  cfg.budget.max_nodes = max_nodes;
  cfg.budget.max_depth = max_depth;
  cfg.ordering = MoveOrdering::parse(ordering, spec.size);
  cfg.zone_pruning = rzs;
  cfg.and_player_may_pass = pass_and;
  SolveResult res = solve_problem(spec, cfg);

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
  doc.root = spec.position();
  doc.rz = res.rz;
  doc.tree = res.tree;

  py::dict out;
  out["status"] = std::string(status_name(res.status));
  out["nodes"] = res.stats.nodes;
  out["expanded"] = res.stats.expanded;
  out["tt_hits"] = res.stats.tt_hits;
  out["search_depth"] = res.stats.max_depth;
  std::vector<std::string> rz;
  for (Grid g : res.rz.grids()) rz.push_back(g.to_string());
  out["rz"] = rz;
  out["rz_size"] = res.rz.count();
  out["caveat_repetition"] = res.repetition_caveat;
  out["proof"] = write_proof(doc);
  out["warnings"] = warnings;
  return out;
}

bool verify_proof_text(const std::string& proof_text) {
  ProofDocument doc = parse_proof(proof_text);
  if (doc.result != SolveStatus::Win || !doc.tree) return false;
  if (doc.game == GameKind::Hex)
    return verify_replay<HexGame>(*doc.tree, doc.hex_goal(), doc.root, doc.root);
  return verify_replay<GoGame>(*doc.tree, doc.go_goal(), doc.root, doc.root);
}

std::string canonical_problem(const std::string& text,
                              std::optional<std::string> rules) {
  ProblemSpec spec = spec_from_text(text, rules, nullptr);
  return serialize_problem(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "relevance-zone goal solver: search, proofs, and replay checks";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<PatternMismatch>(m, "PatternMismatch");
  py::register_exception<IllegalMoveError>(m, "IllegalMoveError");

  m.def("solve_text", &solve_text, py::arg("text"),
        py::arg("rules") = std::nullopt, py::arg("max_nodes") = 500000,
        py::arg("max_depth") = 0, py::arg("ordering") = "liberty",
        py::arg("rzs") = true, py::arg("pass_and") = true,
        "Solve a problem given as SGF or hex board text; returns a dict with "
        "the verdict, search stats, relevance zone, and proof file text.");
  m.def(
      "solve_file",
      [](const std::string& path, std::optional<std::string> rules,
         uint64_t max_nodes, int max_depth, const std::string& ordering,
         bool rzs, bool pass_and) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open problem file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return solve_text(buf.str(), rules, max_nodes, max_depth, ordering,
                          rzs, pass_and);
      },
      py::arg("path"), py::arg("rules") = std::nullopt,
      py::arg("max_nodes") = 500000, py::arg("max_depth") = 0,
      py::arg("ordering") = "liberty", py::arg("rzs") = true,
      py::arg("pass_and") = true, "Solve a problem file (SGF or hex text).");
  m.def("verify_proof", &verify_proof_text, py::arg("proof_text"),
        "Parse a proof file and replay the win proof against its own root.");
  m.def("canonical_problem", &canonical_problem, py::arg("text"),
        py::arg("rules") = std::nullopt,
        "Parse and re-serialize a problem in canonical form.");
  m.attr("__version__") = "1.0.0";
}
