#pragma once

#include <cstdint>
#include <vector>

#include "rzs/board.h"

namespace rzs {

// A region is a maximal orthogonally-connected set of grids not occupied by
// the player under analysis. It is vital to a bordering block when every
// empty grid it contains is a liberty of that block.
struct RegionInfo {
  Zone grids;
  Zone empties;
  std::vector<int> border;    // block indices adjacent to the region
  std::vector<int> vital_to;  // block indices the region is vital to
};

// Static safety: the classic two-vital-regions fixpoint. Blocks that survive
// cannot be captured even if the owner always passes.
struct SafetyAnalysis {
  std::vector<Zone> blocks;
  std::vector<RegionInfo> regions;
  std::vector<char> block_safe;
  std::vector<char> region_alive;
  Zone safe_stones;

  bool grid_safe(Grid g) const { return safe_stones.contains(g); }
};

SafetyAnalysis analyze_safety(const Position& pos, PlayerColor p);

enum class GoalStatus { Achieved, Failed, Open };

enum class GoGoalKind : uint8_t {
  CrucialSafety,    // some crucial stone's block becomes statically safe
  KillAllDefense,   // any block of the defender becomes statically safe
};

// The goal player is the side trying to achieve the goal (the OR player in
// the search); the opponent tries to refute it.
struct GoGoal {
  GoGoalKind kind = GoGoalKind::KillAllDefense;
  PlayerColor player = PlayerColor::White;
  std::vector<Grid> crucial;  // CrucialSafety only

  uint64_t key(int n) const;
};

// Achieved / Failed / Open for the goal on this position.
GoalStatus go_goal_status(const Position& pos, const GoGoal& goal);

// Zone certifying an Achieved leaf: the safe blocks behind the achievement
// plus their vital regions, closed transitively (a region pulls in all its
// bordering blocks, a block pulls in all its surviving vital regions). For
// KillAllDefense the smallest single-block closure is chosen.
Zone go_leaf_rzone(const Position& pos, const GoGoal& goal);

}  // namespace rzs
