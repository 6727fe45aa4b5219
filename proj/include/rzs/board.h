#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rzs/grid.h"
#include "rzs/zone.h"

namespace rzs {

// Orthogonal neighbors of g on an n x n board; returns how many were written.
inline int neighbors4(Grid g, int n, Grid out[4]) {
  int k = 0;
  if (g.col > 0) out[k++] = Grid(g.col - 1, g.row);
  if (g.col + 1 < n) out[k++] = Grid(g.col + 1, g.row);
  if (g.row > 0) out[k++] = Grid(g.col, g.row - 1);
  if (g.row + 1 < n) out[k++] = Grid(g.col, g.row + 1);
  return k;
}

struct PlayResult {
  bool legal = false;
  Zone captured;  // opponent stones removed by the move
};

// A go position: stone bitboards, the player to move, and an incrementally
// maintained hash. Stones never move; they are placed and maybe captured.
class Position {
 public:
  explicit Position(int n, PlayerColor to_move = PlayerColor::Black);

  int size() const { return n_; }
  PlayerColor to_move() const { return to_move_; }
  void set_to_move(PlayerColor p);

  bool on_board(Grid g) const {
    return g.col >= 0 && g.col < n_ && g.row >= 0 && g.row < n_;
  }
  bool has_stone(Grid g, PlayerColor p) const {
    return stones_[static_cast<int>(p)].test(g.index(n_));
  }
  bool is_empty(Grid g) const {
    return !stones_[0].test(g.index(n_)) && !stones_[1].test(g.index(n_));
  }
  std::optional<PlayerColor> stone_at(Grid g) const {
    if (has_stone(g, PlayerColor::Black)) return PlayerColor::Black;
    if (has_stone(g, PlayerColor::White)) return PlayerColor::White;
    return std::nullopt;
  }
  Zone stones(PlayerColor p) const {
    Zone z(n_);
    z.bits = stones_[static_cast<int>(p)];
    return z;
  }
  size_t stone_count(PlayerColor p) const {
    return stones_[static_cast<int>(p)].count();
  }

  // Setup-time editing; keeps the hash in sync.
  void set_stone(Grid g, PlayerColor p);
  void clear_stone(Grid g);

  // Full-board hash covering stones, player to move, and board size.
  uint64_t hash() const { return hash_; }
  // Recomputed from scratch; must always equal hash().
  uint64_t hash_scratch() const;

  // The block of stones containing g (g must carry a stone).
  Zone block_at(Grid g) const;
  Zone liberties_of(const Zone& block) const;
  int liberty_count_at(Grid g) const { return liberties_of(block_at(g)).count(); }
  // All blocks of one color, each reported once, in first-grid order.
  std::vector<Zone> blocks(PlayerColor p) const;

  // Legality for the player to move: empty grid, not suicide. Pass is always
  // legal. Repetition is tracked by the search, not the board.
  bool is_legal(Move m) const;
  // Plays m for the player to move. On an illegal move the position is left
  // unchanged and .legal is false.
  PlayResult play(Move m);
  // Empty grids that are legal, in (row, col) order, optionally plus pass.
  std::vector<Move> legal_moves(bool include_pass) const;

  // Stone equality restricted to a zone (player to move not included).
  bool same_pattern(const Position& other, const Zone& z) const;

  // Plain text: n rows, top row first. Without an overlay: X black, O white,
  // '.' empty. With one: in-zone stones are lowercase x/o, in-zone empties
  // '#', and out-of-zone grids keep X/O/'.'. The overlay form parses back to
  // both the position and the zone, so it round-trips exactly.
  std::string to_text(const Zone* overlay = nullptr) const;
  static Position parse(const std::string& text, PlayerColor to_move,
                        Zone* overlay_out = nullptr);

  // Display form with column letters and row numbers.
  std::string pretty(const Zone* overlay = nullptr) const;

  friend bool operator==(const Position& a, const Position& b) {
    return a.n_ == b.n_ && a.to_move_ == b.to_move_ &&
           a.stones_[0] == b.stones_[0] && a.stones_[1] == b.stones_[1];
  }

 private:
  int n_;
  PlayerColor to_move_;
  std::bitset<kMaxCells> stones_[2];
  uint64_t hash_;
};

}  // namespace rzs
