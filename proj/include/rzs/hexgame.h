#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rzs/benson.h"
#include "rzs/board.h"

namespace rzs {

// Hex neighborhood on the parallelogram board: the four orthogonal
// directions plus the (-1,-1) and (+1,+1) diagonals. Returns count written.
inline int hex_neighbors(Grid g, int n, Grid out[6]) {
  static constexpr int dc[6] = {-1, 1, 0, 0, -1, 1};
  static constexpr int dr[6] = {0, 0, -1, 1, -1, 1};
  int k = 0;
  for (int i = 0; i < 6; ++i) {
    int c = g.col + dc[i], r = g.row + dr[i];
    if (c >= 0 && c < n && r >= 0 && r < n) out[k++] = Grid(c, r);
  }
  return k;
}

enum class HexSide : uint8_t { Bottom, Top, Left, Right };

std::string side_name(HexSide s);
HexSide parse_side(const std::string& name);

inline bool on_side(Grid g, int n, HexSide s) {
  switch (s) {
    case HexSide::Bottom: return g.row == 0;
    case HexSide::Top: return g.row == n - 1;
    case HexSide::Left: return g.col == 0;
    case HexSide::Right: return g.col == n - 1;
  }
  return false;
}

// Connect all crucial stones into one chain that reaches the target side.
// The side acts as a permanent pseudo-block of the goal player's color.
struct HexGoal {
  PlayerColor player = PlayerColor::White;
  std::vector<Grid> crucial;
  HexSide target = HexSide::Bottom;

  uint64_t key(int n) const;
};

// Places a stone for the player to move; Hex never captures. Throws
// IllegalMoveError on an occupied grid; pass just flips the turn.
void hex_play(Position& p, Move m);

// Achieved: one goal-player chain holds every crucial grid and touches the
// target side. Failed: no path of goal-player-or-empty grids links the
// crucial stones to the target (the opponent owns a severing chain).
GoalStatus hex_goal_status(const Position& p, const HexGoal& goal);

// Stones of the connecting chain; only valid when Achieved.
Zone hex_leaf_rzone(const Position& p, const HexGoal& goal);

// Hex needs no zone growth: no captures, no illegal placements beyond
// occupancy, so patterns transfer as-is.
inline Zone hex_dilate(Zone z) { return z; }

// Problem text: `size <n>`, n rows of .XO (top row first), `crucial:` grids,
// `target:` side, optional `tomove:` X|O (default: the crucial owner's
// opponent). Stone counts must be reachable in alternating play.
struct HexProblem {
  Position position;
  HexGoal goal;
};
HexProblem parse_hex_problem(const std::string& text);
std::string serialize_hex_problem(const HexProblem& prob);

}  // namespace rzs
