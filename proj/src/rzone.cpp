#include "rzs/rzone.h"

namespace rzs {
namespace {

// Blocks of either color with at least one stone in z, ordered by their
// smallest stone so processing order is reproducible.
std::vector<Zone> zone_blocks(const Position& p, const Zone& z) {
  std::vector<Zone> out;
  std::bitset<kMaxCells> seen;
  const int n = p.size();
  for (int i = 0; i < n * n; ++i) {
    Grid g = Grid::from_index(i, n);
    if (!z.contains(g) || seen.test(i) || p.is_empty(g)) continue;
    Zone b = p.block_at(g);
    seen |= b.bits;
    out.push_back(std::move(b));
  }
  return out;
}

// Opponent blocks 4-adjacent to any grid of `around`, unioned.
Zone blocks_adjacent(const Position& p, const Zone& around, PlayerColor owner) {
  Zone out(p.size());
  Grid nb[4];
  for (Grid g : around.grids()) {
    int k = neighbors4(g, p.size(), nb);
    for (int i = 0; i < k; ++i)
      if (p.has_stone(nb[i], owner) && !out.contains(nb[i]))
        out |= p.block_at(nb[i]);
  }
  return out;
}

}  // namespace

Zone z_border(const Zone& z) {
  Zone out(z.n);
  Grid nb[4];
  for (Grid g : z.grids()) {
    int k = neighbors4(g, z.n, nb);
    for (int i = 0; i < k; ++i)
      if (!z.contains(nb[i])) { out.add(g); break; }
  }
  return out;
}

Zone apply_dl1(const Position& p, Zone z) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Zone& b : zone_blocks(p, z)) {
      Zone libs = p.liberties_of(b);
      if (libs.empty() || !(libs & z).empty()) continue;
      z.add(libs.first());
      changed = true;
    }
  }
  return z;
}

Zone dilate_or(const Position& p, Move winning_move, Zone z_u) {
  if (winning_move.pass) return apply_dl1(p, z_u);
  Position after = p;
  PlayResult r = after.play(winning_move);
  if (!r.legal)
    throw IllegalMoveError("dilation given an illegal winning move " +
                           winning_move.to_string());
  z_u.add(winning_move.grid);
  if (!r.captured.empty()) {
    z_u |= r.captured;
    z_u |= blocks_adjacent(p, r.captured, p.to_move());
  }
  return apply_dl1(p, z_u);
}

Zone dilate_and(const Position& p, Zone z) {
  const int n = p.size();
  const PlayerColor mover = p.to_move();           // the goal player's opponent
  const PlayerColor goal_player = opponent(mover);
  size_t before = 0;
  do {
    before = z.count();

    // (a) in-zone suicides stay suicides on any same-pattern position.
    for (int i = 0; i < n * n; ++i) {
      Grid g = Grid::from_index(i, n);
      if (!z.contains(g) || !p.is_empty(g) || p.is_legal(Move(g))) continue;
      Zone seed(n);
      seed.add(g);
      Zone mover_blocks = blocks_adjacent(p, seed, mover);
      z |= mover_blocks;
      Zone around = mover_blocks;
      around.add(g);
      z |= blocks_adjacent(p, around, goal_player);
    }

    // (b) goal-player blocks on the zone border can't be captured from
    // outside: keep two liberties in-zone, or in atari pull in the mover's
    // surrounding blocks (the last liberty itself arrives via DL-1).
    Zone border = z_border(z);
    for (const Zone& b : zone_blocks(p, z)) {
      if (!p.has_stone(b.first(), goal_player)) continue;
      if ((b & border).empty()) continue;
      Zone libs = p.liberties_of(b);
      if (libs.count() >= 2) {
        size_t inside = (libs & z).count();
        for (Grid lib : libs.grids()) {
          if (inside >= 2) break;
          if (!z.contains(lib)) { z.add(lib); ++inside; }
        }
      } else {
        z |= blocks_adjacent(p, b, mover);
      }
    }

    // (c)
    z = apply_dl1(p, z);
  } while (z.count() != before);
  return z;
}

}  // namespace rzs
