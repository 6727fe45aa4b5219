#include "rzs/hexgame.h"

#include <sstream>

namespace rzs {
namespace {

uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Flood fill from the crucial stones across grids passing `ok`; reports
// whether the fill covers every crucial grid and touches the target side.
struct Reach {
  bool all_crucial = false;
  bool target = false;
};

template <typename Ok>
Reach hex_reach(const Position& p, const HexGoal& goal, Ok ok) {
  const int n = p.size();
  Zone seen(n);
  std::vector<Grid> stack;
  for (Grid g : goal.crucial) {
    if (!ok(g) || seen.contains(g)) continue;
    seen.add(g);
    stack.push_back(g);
  }
  Grid nb[6];
  Reach r;
  while (!stack.empty()) {
    Grid cur = stack.back();
    stack.pop_back();
    if (on_side(cur, n, goal.target)) r.target = true;
    int k = hex_neighbors(cur, n, nb);
    for (int i = 0; i < k; ++i) {
      if (ok(nb[i]) && !seen.contains(nb[i])) {
        seen.add(nb[i]);
        stack.push_back(nb[i]);
      }
    }
  }
  r.all_crucial = true;
  for (Grid g : goal.crucial)
    if (!seen.contains(g)) r.all_crucial = false;
  return r;
}

}  // namespace

std::string side_name(HexSide s) {
  switch (s) {
    case HexSide::Bottom: return "bottom";
    case HexSide::Top: return "top";
    case HexSide::Left: return "left";
    case HexSide::Right: return "right";
  }
  return "?";
}

HexSide parse_side(const std::string& name) {
  if (name == "bottom") return HexSide::Bottom;
  if (name == "top") return HexSide::Top;
  if (name == "left") return HexSide::Left;
  if (name == "right") return HexSide::Right;
  throw ParseError("unknown side: " + name);
}

uint64_t HexGoal::key(int n) const {
  uint64_t h = mix64(0x9c871e3ULL + static_cast<uint64_t>(target) * 4 +
                     static_cast<uint64_t>(player));
  for (Grid g : crucial) h = mix64(h ^ (static_cast<uint64_t>(g.index(n)) + 0x200));
  return h;
}

void hex_play(Position& p, Move m) {
  if (m.pass) {
    p.set_to_move(opponent(p.to_move()));
    return;
  }
  if (!p.on_board(m.grid) || !p.is_empty(m.grid))
    throw IllegalMoveError("occupied grid " + m.to_string());
  PlayerColor mover = p.to_move();
  p.set_stone(m.grid, mover);
  p.set_to_move(opponent(mover));
}

GoalStatus hex_goal_status(const Position& p, const HexGoal& goal) {
  // Solid connection: chain of goal-player stones only.
  Reach solid = hex_reach(p, goal, [&](Grid g) { return p.has_stone(g, goal.player); });
  if (solid.all_crucial && solid.target) return GoalStatus::Achieved;
  // Severed: even with every empty grid granted, no link remains.
  Reach loose = hex_reach(p, goal, [&](Grid g) {
    return p.has_stone(g, goal.player) || p.is_empty(g);
  });
  if (!loose.all_crucial || !loose.target) return GoalStatus::Failed;
  return GoalStatus::Open;
}

Zone hex_leaf_rzone(const Position& p, const HexGoal& goal) {
  if (goal.crucial.empty()) throw InternalError("hex goal without crucial stones");
  const int n = p.size();
  Zone chain(n);
  std::vector<Grid> stack;
  Grid start = goal.crucial.front();
  if (!p.has_stone(start, goal.player))
    throw InternalError("leaf zone requested on unachieved hex goal");
  chain.add(start);
  stack.push_back(start);
  Grid nb[6];
  while (!stack.empty()) {
    Grid cur = stack.back();
    stack.pop_back();
    int k = hex_neighbors(cur, n, nb);
    for (int i = 0; i < k; ++i) {
      if (p.has_stone(nb[i], goal.player) && !chain.contains(nb[i])) {
        chain.add(nb[i]);
        stack.push_back(nb[i]);
      }
    }
  }
  return chain;
}

HexProblem parse_hex_problem(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  std::vector<std::string> rows;
  std::vector<std::string> crucial_words;
  std::string target_word, tomove_word;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "size") {
      ls >> n;
    } else if (head == "crucial:") {
      std::string w;
      while (ls >> w) crucial_words.push_back(w);
    } else if (head == "target:") {
      ls >> target_word;
    } else if (head == "tomove:") {
      ls >> tomove_word;
    } else {
      rows.push_back(line);
    }
  }
  if (n < 2 || n > kMaxN) throw ParseError("hex problem: bad or missing size");
  if (static_cast<int>(rows.size()) != n)
    throw ParseError("hex problem: expected " + std::to_string(n) + " rows");
  if (crucial_words.empty()) throw ParseError("hex problem: missing crucial:");
  if (target_word.empty()) throw ParseError("hex problem: missing target:");

  HexProblem prob{Position(n), HexGoal{}};
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("hex problem: row has wrong length");
    for (int c = 0; c < n; ++c) {
      Grid g(c, n - 1 - i);
      char ch = rows[i][c];
      if (ch == 'X') prob.position.set_stone(g, PlayerColor::Black);
      else if (ch == 'O') prob.position.set_stone(g, PlayerColor::White);
      else if (ch != '.') throw ParseError("hex problem: bad cell character");
    }
  }
  for (const auto& w : crucial_words)
    prob.goal.crucial.push_back(Grid::parse(w, n));
  prob.goal.target = parse_side(target_word);

  auto owner = prob.position.stone_at(prob.goal.crucial.front());
  if (!owner) throw ParseError("hex problem: crucial grid is empty");
  prob.goal.player = *owner;
  for (Grid g : prob.goal.crucial)
    if (!prob.position.has_stone(g, prob.goal.player))
      throw ParseError("hex problem: crucial grids not all one color");

  if (tomove_word.empty()) {
    prob.position.set_to_move(opponent(prob.goal.player));
  } else if (tomove_word == "X") {
    prob.position.set_to_move(PlayerColor::Black);
  } else if (tomove_word == "O") {
    prob.position.set_to_move(PlayerColor::White);
  } else {
    throw ParseError("hex problem: tomove must be X or O");
  }

  // Alternating play: counts differ by at most one, and the side behind
  // (if any) is the one to move.
  auto black = static_cast<long>(prob.position.stone_count(PlayerColor::Black));
  auto white = static_cast<long>(prob.position.stone_count(PlayerColor::White));
  long diff = black - white;
  if (diff < -1 || diff > 1)
    throw ParseError("hex problem: stone counts not reachable by alternating play");
  if (diff == 1 && prob.position.to_move() == PlayerColor::Black)
    throw ParseError("hex problem: Black ahead but to move");
  if (diff == -1 && prob.position.to_move() == PlayerColor::White)
    throw ParseError("hex problem: White ahead but to move");
  return prob;
}

std::string serialize_hex_problem(const HexProblem& prob) {
  std::ostringstream out;
  int n = prob.position.size();
  out << "size " << n << "\n" << prob.position.to_text();
  out << "crucial:";
  for (Grid g : prob.goal.crucial) out << ' ' << g.to_string();
  out << "\ntarget: " << side_name(prob.goal.target) << "\n";
  out << "tomove: " << color_char(prob.position.to_move()) << "\n";
  return out.str();
}

}  // namespace rzs
