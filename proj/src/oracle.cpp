#include "rzs/oracle.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "rzs/errors.h"

namespace rzs {

namespace {

struct GoView {
  const GoGoal& goal;
  static constexpr bool kRepetition = true;
  GoalStatus status(const Position& p) const { return go_goal_status(p, goal); }
  PlayerColor or_player() const { return goal.player; }
  std::vector<Move> moves(const Position& p, bool pass) const {
    return p.legal_moves(pass);
  }
  void play(Position& p, Move m) const {
    if (!p.play(m).legal) throw InternalError("oracle generated illegal move");
  }
};

struct HexView {
  const HexGoal& goal;
  static constexpr bool kRepetition = false;
  GoalStatus status(const Position& p) const {
    return hex_goal_status(p, goal);
  }
  PlayerColor or_player() const { return goal.player; }
  std::vector<Move> moves(const Position& p, bool pass) const {
    std::vector<Move> out;
    for (int r = 0; r < p.size(); ++r)
      for (int c = 0; c < p.size(); ++c)
        if (p.is_empty(Grid(c, r))) out.push_back(Move{Grid(c, r)});
    if (pass) out.push_back(Move::Pass());
    return out;
  }
  void play(Position& p, Move m) const { hex_play(p, m); }
};

template <class View>
struct Minimax {
  const View& view;
  const OracleOptions& opt;
  uint64_t nodes = 0;
  std::vector<uint64_t> path;

  OracleVerdict run(const Position& p, int depth) {
    if (nodes >= opt.max_nodes) return OracleVerdict::Unknown;
    ++nodes;
    switch (view.status(p)) {
      case GoalStatus::Achieved: return OracleVerdict::Win;
      case GoalStatus::Failed: return OracleVerdict::Fail;
      case GoalStatus::Open: break;
    }
    if (depth >= opt.max_depth) return OracleVerdict::Unknown;
    if constexpr (View::kRepetition) {
      for (uint64_t h : path)
        if (h == p.hash()) return OracleVerdict::Fail;
    }
    const bool or_node = p.to_move() == view.or_player();
    std::vector<Move> moves = view.moves(
        p, or_node ? opt.or_player_may_pass : opt.and_player_may_pass);
    path.push_back(p.hash());
    bool saw_unknown = false;
    OracleVerdict verdict = or_node ? OracleVerdict::Fail : OracleVerdict::Win;
    for (Move m : moves) {
      Position child = p;
      view.play(child, m);
      OracleVerdict v = run(child, depth + 1);
      if (or_node && v == OracleVerdict::Win) {
        verdict = OracleVerdict::Win;
        break;
      }
      if (!or_node && v == OracleVerdict::Fail) {
        verdict = OracleVerdict::Fail;
        break;
      }
      if (v == OracleVerdict::Unknown) saw_unknown = true;
    }
    path.pop_back();
    if (verdict == (or_node ? OracleVerdict::Fail : OracleVerdict::Win) &&
        saw_unknown)
      return OracleVerdict::Unknown;
    return verdict;
  }
};

}  // namespace

OracleResult oracle_go(const Position& p, const GoGoal& goal,
                       const OracleOptions& opt) {
  GoView view{goal};
  Minimax<GoView> mm{view, opt, 0, {}};
  OracleResult res;
  res.verdict = mm.run(p, 0);
  res.nodes = mm.nodes;
  return res;
}

OracleResult oracle_hex(const Position& p, const HexGoal& goal,
                        const OracleOptions& opt) {
  HexView view{goal};
  Minimax<HexView> mm{view, opt, 0, {}};
  OracleResult res;
  res.verdict = mm.run(p, 0);
  res.nodes = mm.nodes;
  return res;
}

void for_each_go_position(int n, int max_stones,
                          const std::function<void(const Position&)>& fn) {
  const int cells = n * n;
  std::vector<int> colors(cells, 0);
  for (;;) {
    int stones = 0;
    for (int v : colors)
      if (v) ++stones;
    if (stones <= max_stones) {
      Position base(n, PlayerColor::Black);
      for (int i = 0; i < cells; ++i) {
        if (colors[i] == 1) base.set_stone(Grid::from_index(i, n), PlayerColor::Black);
        else if (colors[i] == 2) base.set_stone(Grid::from_index(i, n), PlayerColor::White);
      }
      bool valid = true;
      for (PlayerColor side : {PlayerColor::Black, PlayerColor::White}) {
        for (const Zone& b : base.blocks(side))
          if (base.liberties_of(b).empty()) {
            valid = false;
            break;
          }
        if (!valid) break;
      }
      if (valid) {
        fn(base);
        Position white_turn = base;
        white_turn.set_to_move(PlayerColor::White);
        fn(white_turn);
      }
    }
    int i = 0;
    while (i < cells && colors[i] == 2) colors[i++] = 0;
    if (i == cells) break;
    ++colors[i];
  }
}

void for_each_hex_position(int n, int max_stones,
                           const std::function<void(const Position&)>& fn) {
  const int cells = n * n;
  std::vector<int> colors(cells, 0);
  for (;;) {
    int nb = 0, nw = 0;
    for (int v : colors) {
      if (v == 1) ++nb;
      if (v == 2) ++nw;
    }
    if (nb + nw <= max_stones && nb - nw <= 1 && nw - nb <= 1) {
      Position base(n, PlayerColor::Black);
      for (int i = 0; i < cells; ++i) {
        if (colors[i] == 1) base.set_stone(Grid::from_index(i, n), PlayerColor::Black);
        else if (colors[i] == 2) base.set_stone(Grid::from_index(i, n), PlayerColor::White);
      }
      if (nb > nw) {
        base.set_to_move(PlayerColor::White);
        fn(base);
      } else if (nw > nb) {
        base.set_to_move(PlayerColor::Black);
        fn(base);
      } else {
        fn(base);
        Position white_turn = base;
        white_turn.set_to_move(PlayerColor::White);
        fn(white_turn);
      }
    }
    int i = 0;
    while (i < cells && colors[i] == 2) colors[i++] = 0;
    if (i == cells) break;
    ++colors[i];
  }
}

std::map<uint64_t, std::pair<char, int>> load_oracle_cache(
    const std::string& path) {
  std::map<uint64_t, std::pair<char, int>> cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    uint64_t hash;
    std::string verdict;
    int depth;
    if (!(ss >> hash >> verdict >> depth) || verdict.size() != 1)
      throw ParseError("bad oracle cache line: " + line);
    cache[hash] = {verdict[0], depth};
  }
  return cache;
}

void save_oracle_cache(const std::string& path,
                       const std::map<uint64_t, std::pair<char, int>>& cache) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write oracle cache: " + path);
  for (const auto& [hash, entry] : cache)
    out << hash << ' ' << entry.first << ' ' << entry.second << '\n';
}

}  // namespace rzs
