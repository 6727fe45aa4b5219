#include "rzs/board.h"

#include <sstream>

namespace rzs {
namespace {

uint64_t splitmix64(uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ZobristTables {
  uint64_t stone[2][kMaxCells];
  uint64_t side;
  uint64_t size_key[kMaxN + 1];

  ZobristTables() {
    uint64_t s = 0x52ed50c7a1e2f9d3ULL;  // fixed seed: hashes are stable across runs
    for (auto& color : stone)
      for (auto& k : color) k = splitmix64(s);
    side = splitmix64(s);
    for (auto& k : size_key) k = splitmix64(s);
  }
};

const ZobristTables& zobrist() {
  static const ZobristTables t;
  return t;
}

}  // namespace

Position::Position(int n, PlayerColor to_move) : n_(n), to_move_(to_move) {
  if (n < 2 || n > kMaxN) throw ParseError("board size out of range");
  hash_ = zobrist().size_key[n];
  if (to_move_ == PlayerColor::White) hash_ ^= zobrist().side;
}

void Position::set_to_move(PlayerColor p) {
  if (p != to_move_) hash_ ^= zobrist().side;
  to_move_ = p;
}

void Position::set_stone(Grid g, PlayerColor p) {
  if (!on_board(g) || !is_empty(g)) throw InternalError("set_stone on occupied grid");
  stones_[static_cast<int>(p)].set(g.index(n_));
  hash_ ^= zobrist().stone[static_cast<int>(p)][g.index(n_)];
}

void Position::clear_stone(Grid g) {
  auto p = stone_at(g);
  if (!p) throw InternalError("clear_stone on empty grid");
  stones_[static_cast<int>(*p)].reset(g.index(n_));
  hash_ ^= zobrist().stone[static_cast<int>(*p)][g.index(n_)];
}

uint64_t Position::hash_scratch() const {
  uint64_t h = zobrist().size_key[n_];
  if (to_move_ == PlayerColor::White) h ^= zobrist().side;
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < n_ * n_; ++i)
      if (stones_[side].test(i)) h ^= zobrist().stone[side][i];
  return h;
}

Zone Position::block_at(Grid g) const {
  auto p = stone_at(g);
  if (!p) throw InternalError("block_at on empty grid");
  const auto& mine = stones_[static_cast<int>(*p)];
  Zone block(n_);
  std::vector<Grid> stack{g};
  block.add(g);
  Grid nb[4];
  while (!stack.empty()) {
    Grid cur = stack.back();
    stack.pop_back();
    int k = neighbors4(cur, n_, nb);
    for (int i = 0; i < k; ++i) {
      if (mine.test(nb[i].index(n_)) && !block.contains(nb[i])) {
        block.add(nb[i]);
        stack.push_back(nb[i]);
      }
    }
  }
  return block;
}

Zone Position::liberties_of(const Zone& block) const {
  Zone libs(n_);
  Grid nb[4];
  for (Grid g : block.grids()) {
    int k = neighbors4(g, n_, nb);
    for (int i = 0; i < k; ++i)
      if (is_empty(nb[i])) libs.add(nb[i]);
  }
  return libs;
}

std::vector<Zone> Position::blocks(PlayerColor p) const {
  std::vector<Zone> out;
  std::bitset<kMaxCells> seen;
  for (int i = 0; i < n_ * n_; ++i) {
    if (stones_[static_cast<int>(p)].test(i) && !seen.test(i)) {
      Zone b = block_at(Grid::from_index(i, n_));
      seen |= b.bits;
      out.push_back(std::move(b));
    }
  }
  return out;
}

bool Position::is_legal(Move m) const {
  if (m.pass) return true;
  if (!on_board(m.grid) || !is_empty(m.grid)) return false;
  // Fast path: an empty neighbor means no suicide.
  Grid nb[4];
  int k = neighbors4(m.grid, n_, nb);
  for (int i = 0; i < k; ++i)
    if (is_empty(nb[i])) return true;
  // Capture or connect-to-liberty otherwise; trial-play decides.
  Position copy = *this;
  return copy.play(m).legal;
}

PlayResult Position::play(Move m) {
  PlayResult res;
  res.captured = Zone(n_);
  if (m.pass) {
    res.legal = true;
    set_to_move(opponent(to_move_));
    return res;
  }
  if (!on_board(m.grid) || !is_empty(m.grid)) return res;

  PlayerColor me = to_move_, opp = opponent(me);
  set_stone(m.grid, me);

  // Remove opponent blocks left without liberties.
  Grid nb[4];
  int k = neighbors4(m.grid, n_, nb);
  for (int i = 0; i < k; ++i) {
    if (has_stone(nb[i], opp) && !res.captured.contains(nb[i])) {
      Zone block = block_at(nb[i]);
      if (liberties_of(block).empty()) res.captured |= block;
    }
  }
  for (Grid g : res.captured.grids()) clear_stone(g);

  // A move that leaves its own block with no liberties is suicide.
  if (res.captured.empty() && liberties_of(block_at(m.grid)).empty()) {
    clear_stone(m.grid);
    return res;  // position restored, illegal
  }

  res.legal = true;
  set_to_move(opp);
  return res;
}

std::vector<Move> Position::legal_moves(bool include_pass) const {
  std::vector<Move> out;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      Move m{Grid(c, r)};
      if (is_legal(m)) out.push_back(m);
    }
  if (include_pass) out.push_back(Move::Pass());
  return out;
}

bool Position::same_pattern(const Position& other, const Zone& z) const {
  if (n_ != other.n_ || z.n != n_) return false;
  return (stones_[0] & z.bits) == (other.stones_[0] & z.bits) &&
         (stones_[1] & z.bits) == (other.stones_[1] & z.bits);
}

std::string Position::to_text(const Zone* overlay) const {
  std::string s;
  for (int r = n_ - 1; r >= 0; --r) {
    for (int c = 0; c < n_; ++c) {
      Grid g(c, r);
      bool in = overlay && overlay->contains(g);
      char ch;
      if (has_stone(g, PlayerColor::Black)) ch = in ? 'x' : 'X';
      else if (has_stone(g, PlayerColor::White)) ch = in ? 'o' : 'O';
      else ch = in ? '#' : '.';
      s += ch;
    }
    s += '\n';
  }
  return s;
}

Position Position::parse(const std::string& text, PlayerColor to_move,
                         Zone* overlay_out) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    // Trim whitespace; skip blank lines.
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    rows.push_back(line.substr(a, b - a + 1));
  }
  if (rows.empty()) throw ParseError("empty board text");
  int n = static_cast<int>(rows.size());
  Position pos(n, to_move);
  if (overlay_out) *overlay_out = Zone(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("board text is not square");
    int r = n - 1 - i;
    for (int c = 0; c < n; ++c) {
      Grid g(c, r);
      char ch = rows[i][c];
      bool in = (ch == 'x' || ch == 'o' || ch == '#');
      switch (ch) {
        case 'X': case 'x': pos.set_stone(g, PlayerColor::Black); break;
        case 'O': case 'o': pos.set_stone(g, PlayerColor::White); break;
        case '.': case '#': break;
        default: throw ParseError("bad board character");
      }
      if (in && overlay_out) overlay_out->add(g);
    }
  }
  return pos;
}

std::string Position::pretty(const Zone* overlay) const {
  std::string body = to_text(overlay);
  std::ostringstream out;
  out << "   ";
  for (int c = 0; c < n_; ++c) out << kColLetters[c] << ' ';
  out << '\n';
  std::istringstream rows(body);
  std::string line;
  int r = n_;
  while (std::getline(rows, line)) {
    out.width(2);
    out << r << ' ';
    for (char ch : line) out << ch << ' ';
    out << '\n';
    --r;
  }
  return out.str();
}

}  // namespace rzs
