#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "rzs/errors.h"

namespace rzs {

inline constexpr int kMaxN = 19;
inline constexpr int kMaxCells = kMaxN * kMaxN;

// Column letters skip 'I', as is conventional for board coordinates.
inline constexpr const char* kColLetters = "ABCDEFGHJKLMNOPQRST";

// A grid is one intersection. row 0 is the bottom edge ("1"), col 0 is "A".
// Ordering is (row, col) ascending: A1 < B1 < ... < A2 < B2 < ...
struct Grid {
  int8_t col = 0;
  int8_t row = 0;

  constexpr Grid() = default;
  constexpr Grid(int c, int r) : col(static_cast<int8_t>(c)), row(static_cast<int8_t>(r)) {}

  constexpr int index(int n) const { return row * n + col; }
  static constexpr Grid from_index(int idx, int n) { return Grid(idx % n, idx / n); }

  friend constexpr bool operator==(Grid a, Grid b) = default;
  friend constexpr auto operator<=>(Grid a, Grid b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }

  std::string to_string() const {
    std::string s;
    s += kColLetters[col];
    s += std::to_string(row + 1);
    return s;
  }

  // Parses "C3" style coordinates. Case-insensitive column letter.
  static Grid parse(const std::string& s, int n) {
    if (s.size() < 2) throw ParseError("bad coordinate: " + s);
    char c = s[0];
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    int col = -1;
    for (int i = 0; i < kMaxN; ++i) {
      if (kColLetters[i] == c) { col = i; break; }
    }
    if (col < 0 || col >= n) throw ParseError("bad column in coordinate: " + s);
    int row = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad row in coordinate: " + s);
      row = row * 10 + (s[i] - '0');
    }
    if (row < 1 || row > n) throw ParseError("row out of range in coordinate: " + s);
    return Grid(col, row - 1);
  }
};

// A move is either a grid or a pass.
struct Move {
  Grid grid{};
  bool pass = false;

  constexpr Move() : pass(true) {}
  constexpr explicit Move(Grid g) : grid(g), pass(false) {}
  static constexpr Move Pass() { return Move(); }

  friend constexpr bool operator==(const Move&, const Move&) = default;

  std::string to_string() const { return pass ? "pass" : grid.to_string(); }

  static Move parse(const std::string& s, int n) {
    if (s == "pass" || s == "PASS" || s == "Pass") return Pass();
    return Move(Grid::parse(s, n));
  }
};

enum class PlayerColor : uint8_t { Black = 0, White = 1 };

inline constexpr PlayerColor opponent(PlayerColor p) {
  return p == PlayerColor::Black ? PlayerColor::White : PlayerColor::Black;
}

inline constexpr char color_char(PlayerColor p) {
  return p == PlayerColor::Black ? 'X' : 'O';
}

}  // namespace rzs
