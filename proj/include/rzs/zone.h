#pragma once

#include <bitset>
#include <string>
#include <vector>

#include "rzs/grid.h"

namespace rzs {

// A set of grids on an n x n board. Used for relevance zones, regions,
// blocks, and any other grid subset. The board size travels with the set so
// serialization and iteration do not need extra context.
struct Zone {
  int n = 0;
  std::bitset<kMaxCells> bits;

  Zone() = default;
  explicit Zone(int size) : n(size) {}

  bool contains(Grid g) const { return bits.test(g.index(n)); }
  void add(Grid g) { bits.set(g.index(n)); }
  void remove(Grid g) { bits.reset(g.index(n)); }
  size_t count() const { return bits.count(); }
  bool empty() const { return bits.none(); }

  Zone& operator|=(const Zone& o) { bits |= o.bits; return *this; }
  Zone& operator&=(const Zone& o) { bits &= o.bits; return *this; }
  friend Zone operator|(Zone a, const Zone& b) { a |= b; return a; }
  friend Zone operator&(Zone a, const Zone& b) { a &= b; return a; }
  friend bool operator==(const Zone& a, const Zone& b) = default;

  bool subset_of(const Zone& o) const { return (bits & ~o.bits).none(); }

  // Grids in (row, col) ascending order.
  std::vector<Grid> grids() const {
    std::vector<Grid> out;
    out.reserve(bits.count());
    for (int i = 0; i < n * n; ++i)
      if (bits.test(i)) out.push_back(Grid::from_index(i, n));
    return out;
  }

  // Smallest grid in (row, col) order, for deterministic tie-breaks.
  Grid first() const {
    for (int i = 0; i < n * n; ++i)
      if (bits.test(i)) return Grid::from_index(i, n);
    throw InternalError("first() on empty zone");
  }

  // Rows joined by '/', top row first, '#' in-zone and '.' out. The textual
  // form mirrors how boards are printed so the two line up visually.
  std::string to_string() const {
    std::string s;
    for (int r = n - 1; r >= 0; --r) {
      for (int c = 0; c < n; ++c) s += bits.test(r * n + c) ? '#' : '.';
      if (r > 0) s += '/';
    }
    return s;
  }

  static Zone parse(const std::string& s, int n) {
    Zone z(n);
    int r = n - 1, c = 0;
    for (char ch : s) {
      if (ch == '/') {
        if (c != n) throw ParseError("zone row has wrong length");
        --r;
        c = 0;
        continue;
      }
      if (r < 0 || c >= n) throw ParseError("zone text too long");
      if (ch == '#') z.bits.set(r * n + c);
      else if (ch != '.') throw ParseError("bad zone character");
      ++c;
    }
    if (r != 0 || c != n) throw ParseError("zone text too short");
    return z;
  }
};

}  // namespace rzs
