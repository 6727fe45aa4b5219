#pragma once

#include <memory>
#include <string>

#include "rzs/sgf.h"
#include "rzs/solver.h"

namespace rzs {

// On-disk proof format ("rzs-proof v1"): a header describing the problem,
// search settings, and outcome; a lossless board block with the zone overlay
// (lowercase stones / '#' empties inside the zone); and, for wins, the
// indented solution tree. Node hashes are not stored — parsing replays the
// tree moves from the root board to recompute them.
struct ProofDocument {
  GameKind game = GameKind::KillAllGo;
  int size = 7;
  std::string goal_text;  // canonical goal line, e.g. "killall O"
  bool pass_and = true;
  bool pass_or = false;
  bool zone_pruning = true;
  std::string ordering = "liberty";
  uint64_t max_nodes = 500000;
  int max_depth = 0;
  SolveStatus result = SolveStatus::Unknown;
  SearchStats stats;
  bool repetition_caveat = false;
  Position root{7, PlayerColor::Black};
  Zone rz{7};
  std::shared_ptr<const RzstNode> tree;  // wins only

  GoGoal go_goal() const;
  HexGoal hex_goal() const;
};

// Canonical goal-line text, shared by proofs and log output.
std::string goal_text_go(const GoGoal& goal);
std::string goal_text_hex(const HexGoal& goal);

std::string write_proof(const ProofDocument& doc);
ProofDocument parse_proof(const std::string& text);

}  // namespace rzs
