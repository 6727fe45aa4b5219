#include "rzs/proof_io.h"

#include <functional>
#include <sstream>
#include <vector>

#include "rzs/errors.h"

namespace rzs {

namespace {

const char* kMagic = "rzs-proof v1";

std::string onoff(bool b) { return b ? "on" : "off"; }

bool parse_onoff(const std::string& s, const std::string& key) {
  if (s == "on") return true;
  if (s == "off") return false;
  throw ParseError("proof header " + key + " must be on or off");
}

char player_char(PlayerColor p) { return color_char(p); }

PlayerColor parse_player_char(const std::string& tok) {
  if (tok == "X") return PlayerColor::Black;
  if (tok == "O") return PlayerColor::White;
  throw ParseError("bad player token '" + tok + "' in proof");
}

const char* kind_name(RzstNode::Kind k) {
  switch (k) {
    case RzstNode::Kind::Leaf: return "leaf";
    case RzstNode::Kind::Or: return "or";
    case RzstNode::Kind::And: return "and";
  }
  return "?";
}

RzstNode::Kind parse_kind(const std::string& s) {
  if (s == "leaf") return RzstNode::Kind::Leaf;
  if (s == "or") return RzstNode::Kind::Or;
  if (s == "and") return RzstNode::Kind::And;
  throw ParseError("bad proof node kind '" + s + "'");
}

bool proof_play(GameKind game, Position& p, Move m) {
  if (game == GameKind::Hex) {
    if (!m.pass && (!p.on_board(m.grid) || !p.is_empty(m.grid))) return false;
    hex_play(p, m);
    return true;
  }
  return p.play(m).legal;
}

void write_node(std::ostringstream& out, const RzstNode& node, int depth,
                const std::string& move_tok, bool null_edge) {
  for (int i = 0; i < depth; ++i) out << ' ';
  out << move_tok << " | " << kind_name(node.kind) << " | "
      << (null_edge ? "null" : "-") << " | rz " << node.rz.to_string() << '\n';
  for (const RzstEdge& e : node.edges) {
    if (!e.child) throw InternalError("proof tree with a missing child");
    write_node(out, *e.child, depth + 1, e.move.to_string(), e.null_move);
  }
}

struct TreeLine {
  int depth;
  Move move;
  bool is_root;
  RzstNode::Kind kind;
  bool null_edge;
  Zone rz;
};

TreeLine parse_tree_line(const std::string& line, int n) {
  TreeLine tl{0, Move::Pass(), false, RzstNode::Kind::Leaf, false, Zone(n)};
  size_t i = 0;
  while (i < line.size() && line[i] == ' ') ++i;
  tl.depth = (int)i;
  std::string rest = line.substr(i);
  std::vector<std::string> parts;
  size_t start = 0;
  for (;;) {
    size_t sep = rest.find(" | ", start);
    if (sep == std::string::npos) {
      parts.push_back(rest.substr(start));
      break;
    }
    parts.push_back(rest.substr(start, sep - start));
    start = sep + 3;
  }
  if (parts.size() != 4) throw ParseError("bad proof tree line: " + line);
  if (parts[0] == "root") tl.is_root = true;
  else tl.move = Move::parse(parts[0], n);
  tl.kind = parse_kind(parts[1]);
  if (parts[2] == "null") tl.null_edge = true;
  else if (parts[2] != "-") throw ParseError("bad null marker in: " + line);
  if (parts[3].rfind("rz ", 0) != 0)
    throw ParseError("missing zone in proof tree line: " + line);
  tl.rz = Zone::parse(parts[3].substr(3), n);
  return tl;
}

void recompute_hashes(GameKind game, RzstNode& node, const Position& p) {
  node.position_hash = p.hash();
  for (RzstEdge& e : node.edges) {
    Position child = p;
    if (!proof_play(game, child, e.move))
      throw ParseError("proof contains an illegal move: " + e.move.to_string());
    recompute_hashes(game, const_cast<RzstNode&>(*e.child), child);
  }
}

}  // namespace

std::string goal_text_go(const GoGoal& goal) {
  std::ostringstream out;
  if (goal.kind == GoGoalKind::KillAllDefense) {
    out << "killall " << player_char(goal.player);
  } else {
    out << "crucial " << player_char(goal.player);
    for (Grid g : goal.crucial) out << ' ' << g.to_string();
  }
  return out.str();
}

std::string goal_text_hex(const HexGoal& goal) {
  std::ostringstream out;
  out << "hex " << player_char(goal.player) << ' ' << side_name(goal.target);
  for (Grid g : goal.crucial) out << ' ' << g.to_string();
  return out.str();
}

GoGoal ProofDocument::go_goal() const {
  std::istringstream ss(goal_text);
  std::string kind, player;
  ss >> kind >> player;
  GoGoal goal;
  goal.player = parse_player_char(player);
  if (kind == "killall") {
    goal.kind = GoGoalKind::KillAllDefense;
  } else if (kind == "crucial") {
    goal.kind = GoGoalKind::CrucialSafety;
    std::string tok;
    while (ss >> tok) goal.crucial.push_back(Grid::parse(tok, size));
    if (goal.crucial.empty())
      throw ParseError("crucial goal without crucial grids");
  } else {
    throw ParseError("goal line does not describe a go goal: " + goal_text);
  }
  return goal;
}

HexGoal ProofDocument::hex_goal() const {
  std::istringstream ss(goal_text);
  std::string kind, player, side;
  ss >> kind >> player >> side;
  if (kind != "hex")
    throw ParseError("goal line does not describe a hex goal: " + goal_text);
  HexGoal goal;
  goal.player = parse_player_char(player);
  goal.target = parse_side(side);
  std::string tok;
  while (ss >> tok) goal.crucial.push_back(Grid::parse(tok, size));
  if (goal.crucial.empty())
    throw ParseError("hex goal without crucial grids");
  return goal;
}

std::string write_proof(const ProofDocument& doc) {
  std::ostringstream out;
  out << kMagic << '\n';
  out << "game: " << game_kind_name(doc.game) << '\n';
  out << "size: " << doc.size << '\n';
  out << "goal: " << doc.goal_text << '\n';
  out << "pass-and: " << onoff(doc.pass_and) << '\n';
  out << "pass-or: " << onoff(doc.pass_or) << '\n';
  out << "zone-pruning: " << onoff(doc.zone_pruning) << '\n';
  out << "ordering: " << doc.ordering << '\n';
  out << "max-nodes: " << doc.max_nodes << '\n';
  out << "max-depth: " << doc.max_depth << '\n';
  out << "result: " << status_name(doc.result) << '\n';
  out << "nodes: " << doc.stats.nodes << '\n';
  out << "expanded: " << doc.stats.expanded << '\n';
  out << "tt-hits: " << doc.stats.tt_hits << '\n';
  out << "search-depth: " << doc.stats.max_depth << '\n';
  if (doc.repetition_caveat) out << "caveat: repetition\n";
  out << "board:\n" << doc.root.to_text(&doc.rz);
  out << "tomove: " << player_char(doc.root.to_move()) << '\n';
  if (doc.tree) {
    out << "tree:\n";
    write_node(out, *doc.tree, 0, "root", false);
  }
  return out.str();
}

ProofDocument parse_proof(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  size_t i = 0;
  if (i >= lines.size() || lines[i] != kMagic)
    throw ParseError("not a proof file (missing '" + std::string(kMagic) +
                     "' header)");
  ++i;

  ProofDocument doc;
  bool saw_result = false;
  std::string board_text;
  PlayerColor to_move = PlayerColor::Black;
  bool saw_board = false, saw_tomove = false;

  auto split_kv = [](const std::string& line) -> std::pair<std::string, std::string> {
    size_t sep = line.find(": ");
    if (sep == std::string::npos) {
      if (!line.empty() && line.back() == ':')
        return {line.substr(0, line.size() - 1), ""};
      throw ParseError("bad proof header line: " + line);
    }
    return {line.substr(0, sep), line.substr(sep + 2)};
  };

  while (i < lines.size() && lines[i] != "board:") {
    auto [key, value] = split_kv(lines[i]);
    if (key == "game") doc.game = parse_game_kind(value);
    else if (key == "size") doc.size = std::stoi(value);
    else if (key == "goal") doc.goal_text = value;
    else if (key == "pass-and") doc.pass_and = parse_onoff(value, key);
    else if (key == "pass-or") doc.pass_or = parse_onoff(value, key);
    else if (key == "zone-pruning") doc.zone_pruning = parse_onoff(value, key);
    else if (key == "ordering") doc.ordering = value;
    else if (key == "max-nodes") doc.max_nodes = std::stoull(value);
    else if (key == "max-depth") doc.max_depth = std::stoi(value);
    else if (key == "result") {
      saw_result = true;
      if (value == "WIN") doc.result = SolveStatus::Win;
      else if (value == "FAIL") doc.result = SolveStatus::Fail;
      else if (value == "UNKNOWN") doc.result = SolveStatus::Unknown;
      else throw ParseError("bad result '" + value + "'");
    } else if (key == "nodes") doc.stats.nodes = std::stoull(value);
    else if (key == "expanded") doc.stats.expanded = std::stoull(value);
    else if (key == "tt-hits") doc.stats.tt_hits = std::stoull(value);
    else if (key == "search-depth") doc.stats.max_depth = std::stoi(value);
    else if (key == "caveat") doc.repetition_caveat = (value == "repetition");
    else throw ParseError("unknown proof header key: " + key);
    ++i;
  }
  if (!saw_result) throw ParseError("proof file missing result");
  if (i >= lines.size()) throw ParseError("proof file missing board");
  ++i;  // board:
  for (int r = 0; r < doc.size; ++r) {
    if (i >= lines.size()) throw ParseError("board block truncated");
    board_text += lines[i++] + "\n";
  }
  saw_board = true;
  if (i >= lines.size() || lines[i].rfind("tomove: ", 0) != 0)
    throw ParseError("proof file missing tomove line");
  to_move = parse_player_char(lines[i].substr(8));
  saw_tomove = true;
  ++i;
  (void)saw_board;
  (void)saw_tomove;

  Zone overlay(doc.size);
  doc.root = Position::parse(board_text, to_move, &overlay);
  if (doc.root.size() != doc.size)
    throw ParseError("board block does not match the declared size");
  doc.rz = overlay;

  if (i < lines.size() && lines[i] == "tree:") {
    ++i;
    std::vector<std::pair<int, std::shared_ptr<RzstNode>>> stack;
    std::shared_ptr<RzstNode> root;
    for (; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      TreeLine tl = parse_tree_line(lines[i], doc.size);
      auto node = std::make_shared<RzstNode>();
      node->kind = tl.kind;
      node->rz = tl.rz;
      if (tl.is_root) {
        if (root) throw ParseError("proof has two roots");
        if (tl.depth != 0) throw ParseError("root node must not be indented");
        root = node;
        stack = {{0, node}};
        continue;
      }
      if (!root) throw ParseError("tree lines before the root");
      while (!stack.empty() && stack.back().first >= tl.depth) stack.pop_back();
      if (stack.empty() || stack.back().first != tl.depth - 1)
        throw ParseError("bad proof tree indentation: " + lines[i]);
      stack.back().second->edges.push_back({tl.move, tl.null_edge, node});
      stack.emplace_back(tl.depth, node);
    }
    if (!root) throw ParseError("empty tree block");
    recompute_hashes(doc.game, *root, doc.root);
    doc.tree = root;
  }
  if (doc.result == SolveStatus::Win && !doc.tree)
    throw ParseError("winning proof without a tree");
  return doc;
}

}  // namespace rzs
