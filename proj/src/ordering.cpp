#include "rzs/ordering.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rzs/errors.h"

namespace rzs {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

MoveOrdering MoveOrdering::from_file(const std::string& path, int board_size) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ordering file: " + path);
  MoveOrdering ord;
  ord.policy = Policy::File;
  ord.source_path = path;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok == "reply") {
      std::string key;
      if (!(ss >> key))
        throw ParseError("ordering file line " + std::to_string(lineno) +
                         ": reply needs a trigger move");
      std::vector<Move> answers;
      std::string m;
      while (ss >> m) answers.push_back(Move::parse(m, board_size));
      if (answers.empty())
        throw ParseError("ordering file line " + std::to_string(lineno) +
                         ": reply needs at least one answer");
      ord.replies.emplace_back(Move::parse(key, board_size), std::move(answers));
    } else {
      ord.global.push_back(Move::parse(tok, board_size));
      std::string extra;
      if (ss >> extra)
        throw ParseError("ordering file line " + std::to_string(lineno) +
                         ": one move per line (got trailing '" + extra + "')");
    }
  }
  return ord;
}

std::string MoveOrdering::describe() const {
  switch (policy) {
    case Policy::Lex: return "lex";
    case Policy::Liberty: return "liberty";
    case Policy::File: return "file:" + source_path;
  }
  throw InternalError("bad ordering policy");
}

MoveOrdering MoveOrdering::parse(const std::string& text, int board_size) {
  if (text == "lex") return lex();
  if (text == "liberty") return liberty();
  if (text.rfind("file:", 0) == 0) return from_file(text.substr(5), board_size);
  throw ParseError("unknown ordering '" + text +
                   "' (expected lex, liberty, or file:<path>)");
}

std::vector<Move> order_moves(std::vector<Move> moves, const MoveOrdering& ord,
                              const std::function<int(Move)>& score,
                              std::optional<Move> last_move) {
  struct Key {
    int bucket;
    int rank;
    int pass;
    int row;
    int col;
  };
  auto key_of = [&](Move m) -> Key {
    Key k{2, 0, m.pass ? 1 : 0, m.pass ? 127 : m.grid.row,
          m.pass ? 127 : m.grid.col};
    if (ord.policy == MoveOrdering::Policy::File) {
      if (last_move) {
        for (const auto& [trigger, answers] : ord.replies) {
          if (!(trigger == *last_move)) continue;
          for (size_t i = 0; i < answers.size(); ++i)
            if (answers[i] == m) return Key{0, (int)i, k.pass, k.row, k.col};
          break;
        }
      }
      for (size_t i = 0; i < ord.global.size(); ++i)
        if (ord.global[i] == m) return Key{1, (int)i, k.pass, k.row, k.col};
    }
    if (ord.policy != MoveOrdering::Policy::Lex && score)
      k.rank = -score(m);
    return k;
  };
  std::vector<std::pair<Key, Move>> keyed;
  keyed.reserve(moves.size());
  for (Move m : moves) keyed.emplace_back(key_of(m), m);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const Key& x = a.first;
    const Key& y = b.first;
    if (x.bucket != y.bucket) return x.bucket < y.bucket;
    if (x.rank != y.rank) return x.rank < y.rank;
    if (x.pass != y.pass) return x.pass < y.pass;
    if (x.row != y.row) return x.row < y.row;
    return x.col < y.col;
  });
  std::vector<Move> out;
  out.reserve(keyed.size());
  for (auto& [k, m] : keyed) out.push_back(m);
  return out;
}

}  // namespace rzs
