#pragma once

#include "rzs/board.h"
#include "rzs/zone.h"

namespace rzs {

// Zone grids adjacent to at least one grid outside the zone.
Zone z_border(const Zone& z);

// Every block (either color) that intersects z must keep at least one of its
// liberties inside z; deficient blocks get their smallest liberty added,
// repeatedly, until stable. This makes every same-pattern position legal
// inside the zone: no in-zone block can be suffocated purely from outside.
Zone apply_dl1(const Position& p, Zone z);

// Zone growth for a winning move m of the goal player on p (p is the
// position *before* m). z_u must already contain m's grid. A capturing win
// additionally pulls in the captured stones and the goal player's blocks
// around them, so the capture replays identically on any same-pattern
// position; apply_dl1 finishes either way.
Zone dilate_or(const Position& p, Move winning_move, Zone z_u);

// Zone growth at a node where the opponent of the goal player is to move on
// p. Fixpoint of three steps per round:
//  (a) every in-zone grid that is suicide for the mover pulls in the mover's
//      adjacent blocks and the goal player's blocks around them, keeping the
//      move illegal on every same-pattern position;
//  (b) every goal-player block touching the zone border keeps two of its
//      liberties inside the zone (smallest first) when it has two or more,
//      or pulls in all of the mover's blocks around it when in atari —
//      out-of-zone play can then never capture it;
//  (c) apply_dl1.
Zone dilate_and(const Position& p, Zone z_u);

}  // namespace rzs
