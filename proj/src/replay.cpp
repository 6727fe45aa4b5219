#include "rzs/replay.h"

namespace rzs {

namespace {

std::vector<Grid> free_cells(const Position& p, const Zone& zone) {
  std::vector<Grid> out;
  for (int r = 0; r < p.size(); ++r)
    for (int c = 0; c < p.size(); ++c) {
      Grid g(c, r);
      if (!zone.contains(g)) out.push_back(g);
    }
  return out;
}

Position with_assignment(const Position& p, const Zone& zone,
                         const std::vector<Grid>& cells,
                         const std::vector<int>& colors) {
  Position q(p.size(), p.to_move());
  for (int r = 0; r < p.size(); ++r)
    for (int c = 0; c < p.size(); ++c) {
      Grid g(c, r);
      if (zone.contains(g)) {
        if (auto s = p.stone_at(g)) q.set_stone(g, *s);
      }
    }
  for (size_t i = 0; i < cells.size(); ++i) {
    if (colors[i] == 1) q.set_stone(cells[i], PlayerColor::Black);
    else if (colors[i] == 2) q.set_stone(cells[i], PlayerColor::White);
  }
  return q;
}

void generate(const Position& p, const Zone& zone, const VariantOptions& opt,
              bool (*plausible)(const Position&),
              const std::function<void(const Position&)>& fn) {
  const std::vector<Grid> cells = free_cells(p, zone);
  const size_t k = cells.size();

  double combos = 1;
  for (size_t i = 0; i < k && combos <= (double)opt.exhaustive_limit; ++i)
    combos *= 3;
  if (combos <= (double)opt.exhaustive_limit) {
    std::vector<int> colors(k, 0);
    for (;;) {
      Position q = with_assignment(p, zone, cells, colors);
      if (plausible(q)) fn(q);
      size_t i = 0;
      while (i < k && colors[i] == 2) colors[i++] = 0;
      if (i == k) break;
      ++colors[i];
    }
    return;
  }

  // Too many assignments: every 1- and 2-cell change, then random sampling.
  auto original_colors = [&]() {
    std::vector<int> colors(k, 0);
    for (size_t i = 0; i < k; ++i) {
      if (p.has_stone(cells[i], PlayerColor::Black)) colors[i] = 1;
      else if (p.has_stone(cells[i], PlayerColor::White)) colors[i] = 2;
    }
    return colors;
  };
  const std::vector<int> base = original_colors();
  auto emit = [&](const std::vector<int>& colors) {
    Position q = with_assignment(p, zone, cells, colors);
    if (plausible(q)) fn(q);
  };
  for (size_t i = 0; i < k; ++i)
    for (int v = 0; v < 3; ++v) {
      if (v == base[i]) continue;
      std::vector<int> colors = base;
      colors[i] = v;
      emit(colors);
    }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      for (int vi = 0; vi < 3; ++vi) {
        if (vi == base[i]) continue;
        for (int vj = 0; vj < 3; ++vj) {
          if (vj == base[j]) continue;
          std::vector<int> colors = base;
          colors[i] = vi;
          colors[j] = vj;
          emit(colors);
        }
      }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dist(0, 2);
  size_t produced = 0, attempts = 0;
  const size_t max_attempts = opt.samples * 64 + 64;
  std::vector<int> colors(k, 0);
  while (produced < opt.samples && attempts < max_attempts) {
    ++attempts;
    for (size_t i = 0; i < k; ++i) colors[i] = dist(rng);
    Position q = with_assignment(p, zone, cells, colors);
    if (!plausible(q)) continue;
    fn(q);
    ++produced;
  }
}

}  // namespace

bool go_position_plausible(const Position& p) {
  for (PlayerColor side : {PlayerColor::Black, PlayerColor::White})
    for (const Zone& b : p.blocks(side))
      if (p.liberties_of(b).empty()) return false;
  return true;
}

bool hex_position_plausible(const Position& p) {
  int diff = (int)p.stone_count(PlayerColor::Black) -
             (int)p.stone_count(PlayerColor::White);
  if (diff > 1 || diff < -1) return false;
  if (diff == 1 && p.to_move() != PlayerColor::White) return false;
  if (diff == -1 && p.to_move() != PlayerColor::Black) return false;
  return true;
}

void for_each_go_variant(const Position& p, const Zone& zone,
                         const VariantOptions& opt,
                         const std::function<void(const Position&)>& fn) {
  generate(p, zone, opt, &go_position_plausible, fn);
}

void for_each_hex_variant(const Position& p, const Zone& zone,
                          const VariantOptions& opt,
                          const std::function<void(const Position&)>& fn) {
  generate(p, zone, opt, &hex_position_plausible, fn);
}

}  // namespace rzs
