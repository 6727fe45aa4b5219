#include "rzs/sgf.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "rzs/errors.h"

namespace rzs {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = (char)std::tolower((unsigned char)c);
  return s;
}

void sort_unique(std::vector<Grid>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct SgfCursor {
  const std::string& s;
  size_t at = 0;

  void skip_ws() {
    while (at < s.size() && std::isspace((unsigned char)s[at])) ++at;
  }
  bool done() {
    skip_ws();
    return at >= s.size();
  }
  char peek() {
    skip_ws();
    if (at >= s.size()) throw MalformedSgf("unexpected end of input", at);
    return s[at];
  }
  void expect(char c) {
    if (peek() != c)
      throw MalformedSgf(std::string("expected '") + c + "'", at);
    ++at;
  }
};

struct SgfProperty {
  std::string ident;
  std::vector<std::string> values;
  size_t offset;  // byte position of the identifier
};

std::vector<SgfProperty> parse_root_node(const std::string& bytes) {
  SgfCursor cur{bytes};
  if (cur.done()) throw MalformedSgf("empty input", 0);
  cur.expect('(');
  cur.expect(';');
  std::vector<SgfProperty> props;
  for (;;) {
    char c = cur.peek();
    if (c == ')') {
      ++cur.at;
      break;
    }
    if (c == ';')
      throw MalformedSgf("move nodes are not supported (setup only)", cur.at);
    if (c == '(')
      throw MalformedSgf("game-tree branches are not supported", cur.at);
    if (!std::isupper((unsigned char)c))
      throw MalformedSgf("expected a property identifier", cur.at);
    SgfProperty prop;
    prop.offset = cur.at;
    while (cur.at < bytes.size() && std::isupper((unsigned char)bytes[cur.at]))
      prop.ident += bytes[cur.at++];
    if (cur.peek() != '[')
      throw MalformedSgf("property " + prop.ident + " has no value", cur.at);
    while (!cur.done() && cur.peek() == '[') {
      ++cur.at;
      std::string value;
      for (;;) {
        if (cur.at >= bytes.size())
          throw MalformedSgf("unterminated property value", cur.at);
        char v = bytes[cur.at++];
        if (v == '\\') {
          if (cur.at >= bytes.size())
            throw MalformedSgf("dangling escape", cur.at);
          value += bytes[cur.at++];
        } else if (v == ']') {
          break;
        } else {
          value += v;
        }
      }
      prop.values.push_back(std::move(value));
    }
    props.push_back(std::move(prop));
  }
  if (!cur.done())
    throw MalformedSgf("trailing content after the game tree", cur.at);
  return props;
}

Grid sgf_point(const std::string& v, int n, size_t offset) {
  if (v.size() != 2 || v[0] < 'a' || v[1] < 'a' || v[0] >= 'a' + n ||
      v[1] >= 'a' + n)
    throw MalformedSgf("bad point '" + v + "'", offset);
  // Second letter counts rows from the top of the diagram.
  return Grid(v[0] - 'a', n - 1 - (v[1] - 'a'));
}

std::string sgf_point_str(Grid g, int n) {
  std::string s;
  s += (char)('a' + g.col);
  s += (char)('a' + (n - 1 - g.row));
  return s;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == ']' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void require_single(const SgfProperty& p) {
  if (p.values.size() != 1)
    throw MalformedSgf("property " + p.ident + " takes one value", p.offset);
}

}  // namespace

const char* game_kind_name(GameKind k) {
  switch (k) {
    case GameKind::Go: return "go";
    case GameKind::KillAllGo: return "killall";
    case GameKind::Hex: return "hex";
  }
  return "?";
}

GameKind parse_game_kind(const std::string& name) {
  std::string s = lower(name);
  if (s == "go") return GameKind::Go;
  if (s == "killall" || s == "kill-all" || s == "killall-go")
    return GameKind::KillAllGo;
  if (s == "hex") return GameKind::Hex;
  throw ParseError("unknown rules '" + name + "' (expected go, killall, hex)");
}

Position ProblemSpec::position() const {
  Position pos(size, to_move);
  for (Grid g : black_setup) {
    if (!pos.is_empty(g)) throw InconsistentSetup("duplicate setup stone at " + g.to_string());
    pos.set_stone(g, PlayerColor::Black);
  }
  for (Grid g : white_setup) {
    if (!pos.is_empty(g)) throw InconsistentSetup("duplicate setup stone at " + g.to_string());
    pos.set_stone(g, PlayerColor::White);
  }
  if (game != GameKind::Hex) {
    for (PlayerColor side : {PlayerColor::Black, PlayerColor::White})
      for (const Zone& b : pos.blocks(side))
        if (pos.liberties_of(b).empty())
          throw InconsistentSetup("setup block without liberties at " +
                                  b.first().to_string());
  }
  return pos;
}

GoGoal ProblemSpec::go_goal() const {
  GoGoal goal;
  if (game == GameKind::KillAllGo) {
    goal.kind = GoGoalKind::KillAllDefense;
    goal.player = PlayerColor::White;
    return goal;
  }
  if (game != GameKind::Go) throw InternalError("go_goal on a hex problem");
  goal.kind = GoGoalKind::CrucialSafety;
  goal.crucial = crucial;
  if (crucial.empty())
    throw InconsistentSetup("crucial-safety problems need crucial marks");
  bool black = std::binary_search(black_setup.begin(), black_setup.end(),
                                  crucial.front());
  goal.player = black ? PlayerColor::Black : PlayerColor::White;
  return goal;
}

HexGoal ProblemSpec::hex_goal() const {
  if (game != GameKind::Hex) throw InternalError("hex_goal on a go problem");
  HexGoal goal;
  goal.crucial = crucial;
  goal.target = target;
  if (crucial.empty())
    throw InconsistentSetup("hex problems need crucial grids");
  bool black = std::binary_search(black_setup.begin(), black_setup.end(),
                                  crucial.front());
  goal.player = black ? PlayerColor::Black : PlayerColor::White;
  return goal;
}

ProblemSpec parse_sgf(const std::string& bytes,
                      std::vector<std::string>* warnings) {
  std::vector<SgfProperty> props = parse_root_node(bytes);

  ProblemSpec spec;
  spec.size = 0;
  std::optional<GameKind> rules;
  std::vector<std::pair<std::string, size_t>> black_raw, white_raw, mark_raw;
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };

  for (const SgfProperty& p : props) {
    if (p.ident == "SZ") {
      require_single(p);
      try {
        spec.size = std::stoi(p.values[0]);
      } catch (const std::exception&) {
        throw MalformedSgf("bad board size '" + p.values[0] + "'", p.offset);
      }
      if (spec.size < 2 || spec.size > kMaxN)
        throw MalformedSgf("board size out of range", p.offset);
    } else if (p.ident == "AB") {
      for (const std::string& v : p.values) black_raw.emplace_back(v, p.offset);
    } else if (p.ident == "AW") {
      for (const std::string& v : p.values) white_raw.emplace_back(v, p.offset);
    } else if (p.ident == "MA") {
      for (const std::string& v : p.values) mark_raw.emplace_back(v, p.offset);
    } else if (p.ident == "PL") {
      require_single(p);
      std::string v = lower(p.values[0]);
      if (v == "b") spec.to_move = PlayerColor::Black;
      else if (v == "w") spec.to_move = PlayerColor::White;
      else throw MalformedSgf("bad player '" + p.values[0] + "'", p.offset);
    } else if (p.ident == "RU") {
      require_single(p);
      std::string v = lower(p.values[0]);
      if (v == "killall" || v == "kill-all" || v == "kill_all")
        rules = GameKind::KillAllGo;
      else if (v == "go" || v == "japanese" || v == "chinese" ||
               v == "tromp-taylor")
        rules = GameKind::Go;
      else
        warn("ignoring unknown rules '" + p.values[0] + "'");
    } else if (p.ident == "KM") {
      require_single(p);
      warn("komi has no effect on goal problems; ignoring KM[" + p.values[0] +
           "]");
    } else if (p.ident == "GC") {
      require_single(p);
      spec.metadata = p.values[0];
    } else if (p.ident == "GM") {
      require_single(p);
      if (p.values[0] != "1")
        throw MalformedSgf("GM[" + p.values[0] + "] is not a go record",
                           p.offset);
    } else if (p.ident == "FF" || p.ident == "CA" || p.ident == "AP" ||
               p.ident == "C") {
      // Accepted and ignored.
    } else {
      throw MalformedSgf("unsupported property " + p.ident, p.offset);
    }
  }

  if (spec.size == 0)
    throw MalformedSgf("missing board size (SZ)", bytes.size());
  for (auto& [v, off] : black_raw)
    spec.black_setup.push_back(sgf_point(v, spec.size, off));
  for (auto& [v, off] : white_raw)
    spec.white_setup.push_back(sgf_point(v, spec.size, off));
  for (auto& [v, off] : mark_raw)
    spec.crucial.push_back(sgf_point(v, spec.size, off));
  sort_unique(spec.black_setup);
  sort_unique(spec.white_setup);
  sort_unique(spec.crucial);

  for (Grid g : spec.black_setup)
    if (std::binary_search(spec.white_setup.begin(), spec.white_setup.end(), g))
      throw InconsistentSetup("both colors set up on " + g.to_string());

  spec.game = rules ? *rules
                    : (spec.crucial.empty() ? GameKind::KillAllGo : GameKind::Go);
  if (spec.game == GameKind::KillAllGo && !spec.crucial.empty())
    throw InconsistentSetup("kill-all problems take no crucial marks");
  if (spec.game == GameKind::Go) {
    int on_black = 0, on_white = 0;
    for (Grid g : spec.crucial) {
      bool b = std::binary_search(spec.black_setup.begin(),
                                  spec.black_setup.end(), g);
      bool w = std::binary_search(spec.white_setup.begin(),
                                  spec.white_setup.end(), g);
      if (!b && !w)
        throw InconsistentSetup("crucial mark on empty grid " + g.to_string());
      (b ? on_black : on_white)++;
    }
    if (on_black && on_white)
      throw InconsistentSetup("crucial marks on both colors");
    spec.go_goal();  // validates mark presence
  }
  spec.position();  // validates setup legality
  return spec;
}

std::string serialize_sgf(const ProblemSpec& spec) {
  if (spec.game == GameKind::Hex)
    throw InternalError("hex problems use the text format");
  std::ostringstream out;
  out << "(;GM[1]FF[4]SZ[" << spec.size << ']';
  if (spec.game == GameKind::KillAllGo) out << "RU[KillAll]";
  auto emit = [&](const char* ident, const std::vector<Grid>& pts) {
    if (pts.empty()) return;
    out << ident;
    for (Grid g : pts) out << '[' << sgf_point_str(g, spec.size) << ']';
  };
  emit("AB", spec.black_setup);
  emit("AW", spec.white_setup);
  out << "PL[" << (spec.to_move == PlayerColor::Black ? 'B' : 'W') << ']';
  emit("MA", spec.crucial);
  if (!spec.metadata.empty()) out << "GC[" << escape_text(spec.metadata) << ']';
  out << ')';
  return out.str();
}

ProblemSpec problem_from_hex(const HexProblem& prob) {
  ProblemSpec spec;
  spec.game = GameKind::Hex;
  spec.size = prob.position.size();
  spec.to_move = prob.position.to_move();
  for (Grid g : prob.position.stones(PlayerColor::Black).grids())
    spec.black_setup.push_back(g);
  for (Grid g : prob.position.stones(PlayerColor::White).grids())
    spec.white_setup.push_back(g);
  spec.crucial = prob.goal.crucial;
  sort_unique(spec.crucial);
  spec.target = prob.goal.target;
  return spec;
}

HexProblem hex_problem(const ProblemSpec& spec) {
  if (spec.game != GameKind::Hex) throw InternalError("not a hex problem");
  HexProblem prob{spec.position(), spec.hex_goal()};
  return prob;
}

ProblemSpec load_problem_file(const std::string& path,
                              std::optional<GameKind> rules,
                              std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();

  size_t first = bytes.find_first_not_of(" \t\r\n");
  bool looks_sgf = first != std::string::npos && bytes[first] == '(';
  if (rules && *rules == GameKind::Hex) {
    if (looks_sgf)
      throw ParseError(path + ": hex problems use the text board format");
    return problem_from_hex(parse_hex_problem(bytes));
  }
  if (!looks_sgf) {
    if (rules)
      throw ParseError(path + ": go problems use SGF");
    return problem_from_hex(parse_hex_problem(bytes));
  }
  ProblemSpec spec = parse_sgf(bytes, warnings);
  if (rules && *rules != spec.game) {
    if (spec.game == GameKind::Go && *rules == GameKind::KillAllGo &&
        !spec.crucial.empty())
      throw InconsistentSetup("kill-all override conflicts with crucial marks");
    spec.game = *rules;
    spec.go_goal();  // re-validate under the forced kind
  }
  return spec;
}

std::string serialize_problem(const ProblemSpec& spec) {
  if (spec.game == GameKind::Hex)
    return serialize_hex_problem(hex_problem(spec));
  return serialize_sgf(spec);
}

}  // namespace rzs
