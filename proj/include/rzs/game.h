#pragma once

#include <functional>
#include <vector>

#include "rzs/benson.h"
#include "rzs/board.h"
#include "rzs/hexgame.h"
#include "rzs/rzone.h"

namespace rzs {

// Static adapters that give the solver one surface over both games: goal
// evaluation, legal-move generation, zone dilation, and the contact heuristic
// behind the "liberty" ordering policy. The goal player always owns the OR
// nodes; the opponent owns the AND nodes.

struct GoGame {
  using Goal = GoGoal;
  static constexpr bool kHasRepetition = true;
  static constexpr const char* kName = "go";

  static PlayerColor or_player(const Goal& g) { return g.player; }
  static uint64_t goal_key(const Goal& g, int n) { return g.key(n); }
  static GoalStatus status(const Position& p, const Goal& g) {
    return go_goal_status(p, g);
  }
  static Zone leaf_zone(const Position& p, const Goal& g) {
    return go_leaf_rzone(p, g);
  }
  static Zone dilate_winning_move(const Position& p, Move m, Zone child_rz) {
    return dilate_or(p, m, std::move(child_rz));
  }
  static Zone dilate_union(const Position& p, Zone z) {
    return dilate_and(p, std::move(z));
  }
  static bool try_play(Position& p, Move m) { return p.play(m).legal; }
  static std::vector<Move> legal_moves(const Position& p, bool include_pass) {
    return p.legal_moves(include_pass);
  }

  // Contact pressure: prefer moves that touch short-of-liberty opponent
  // blocks, then any contact. Favors captures, atari, and connections over
  // quiet moves.
  static std::function<int(Move)> make_scorer(const Position& p,
                                              const Goal& /*goal*/) {
    const Position* pos = &p;
    return [pos](Move m) -> int {
      if (m.pass) return 0;
      int n = pos->size();
      PlayerColor me = pos->to_move(), opp = opponent(me);
      Grid nb[4];
      int k = neighbors4(m.grid, n, nb);
      int own = 0, enemy = 0, atari_blocks = 0;
      Zone counted(n);
      for (int i = 0; i < k; ++i) {
        if (pos->has_stone(nb[i], me)) ++own;
        if (pos->has_stone(nb[i], opp)) {
          ++enemy;
          if (!counted.contains(nb[i])) {
            Zone b = pos->block_at(nb[i]);
            counted |= b;
            if (pos->liberties_of(b).count() == 1) ++atari_blocks;
          }
        }
      }
      return 3 * atari_blocks + enemy + own;
    };
  }
};

struct HexGame {
  using Goal = HexGoal;
  static constexpr bool kHasRepetition = false;
  static constexpr const char* kName = "hex";

  static PlayerColor or_player(const Goal& g) { return g.player; }
  static uint64_t goal_key(const Goal& g, int n) { return g.key(n); }
  static GoalStatus status(const Position& p, const Goal& g) {
    return hex_goal_status(p, g);
  }
  static Zone leaf_zone(const Position& p, const Goal& g) {
    return hex_leaf_rzone(p, g);
  }
  static Zone dilate_winning_move(const Position& /*p*/, Move m, Zone child_rz) {
    if (!m.pass) child_rz.add(m.grid);
    return child_rz;
  }
  static Zone dilate_union(const Position& /*p*/, Zone z) { return z; }
  static bool try_play(Position& p, Move m) {
    if (!m.pass && (!p.on_board(m.grid) || !p.is_empty(m.grid))) return false;
    hex_play(p, m);
    return true;
  }
  static std::vector<Move> legal_moves(const Position& p, bool include_pass) {
    std::vector<Move> out;
    for (int r = 0; r < p.size(); ++r)
      for (int c = 0; c < p.size(); ++c)
        if (p.is_empty(Grid(c, r))) out.push_back(Move{Grid(c, r)});
    if (include_pass) out.push_back(Move::Pass());
    return out;
  }

  // Contact heuristic: the goal player grows from chains that hold crucial
  // stones; the opponent leans on the goal player's stones to cut.
  static std::function<int(Move)> make_scorer(const Position& p,
                                              const Goal& goal) {
    int n = p.size();
    Zone crucial_chains(n);
    for (Grid g : goal.crucial) {
      if (!p.has_stone(g, goal.player) || crucial_chains.contains(g)) continue;
      std::vector<Grid> stack{g};
      crucial_chains.add(g);
      Grid nb[6];
      while (!stack.empty()) {
        Grid cur = stack.back();
        stack.pop_back();
        int k = hex_neighbors(cur, n, nb);
        for (int i = 0; i < k; ++i)
          if (p.has_stone(nb[i], goal.player) && !crucial_chains.contains(nb[i])) {
            crucial_chains.add(nb[i]);
            stack.push_back(nb[i]);
          }
      }
    }
    const Position* pos = &p;
    bool mover_is_goal = (p.to_move() == goal.player);
    PlayerColor goal_player = goal.player;
    return [pos, crucial_chains, mover_is_goal, goal_player](Move m) -> int {
      if (m.pass) return 0;
      int n = pos->size();
      Grid nb[6];
      int k = hex_neighbors(m.grid, n, nb);
      int adj_goal = 0, adj_opp = 0, adj_crucial = 0;
      for (int i = 0; i < k; ++i) {
        if (pos->has_stone(nb[i], goal_player)) ++adj_goal;
        if (pos->has_stone(nb[i], opponent(goal_player))) ++adj_opp;
        if (crucial_chains.contains(nb[i])) adj_crucial = 1;
      }
      if (mover_is_goal) return 2 * adj_crucial + adj_goal + adj_opp;
      return 2 * adj_goal + adj_opp;
    };
  }
};

}  // namespace rzs
