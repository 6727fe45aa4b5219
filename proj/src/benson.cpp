#include "rzs/benson.h"

#include <algorithm>

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

}  // namespace

SafetyAnalysis analyze_safety(const Position& pos, PlayerColor p) {
  const int n = pos.size();
  SafetyAnalysis a;
  a.safe_stones = Zone(n);
  a.blocks = pos.blocks(p);

  std::vector<int> block_id(n * n, -1);
  for (size_t i = 0; i < a.blocks.size(); ++i)
    for (Grid g : a.blocks[i].grids()) block_id[g.index(n)] = static_cast<int>(i);

  // Regions: flood fill over grids not occupied by p.
  std::vector<char> seen(n * n, 0);
  Grid nb[4];
  for (int start = 0; start < n * n; ++start) {
    if (seen[start] || pos.has_stone(Grid::from_index(start, n), p)) continue;
    RegionInfo r;
    r.grids = Zone(n);
    r.empties = Zone(n);
    std::vector<int> stack{start};
    seen[start] = 1;
    std::vector<char> border_mark(a.blocks.size(), 0);
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      Grid g = Grid::from_index(cur, n);
      r.grids.add(g);
      if (pos.is_empty(g)) r.empties.add(g);
      int k = neighbors4(g, n, nb);
      for (int i = 0; i < k; ++i) {
        int idx = nb[i].index(n);
        if (pos.has_stone(nb[i], p)) {
          border_mark[block_id[idx]] = 1;
        } else if (!seen[idx]) {
          seen[idx] = 1;
          stack.push_back(idx);
        }
      }
    }
    for (size_t b = 0; b < a.blocks.size(); ++b)
      if (border_mark[b]) r.border.push_back(static_cast<int>(b));

    // Vital to b: borders b and every empty grid is adjacent to b.
    for (int b : r.border) {
      bool vital = true;
      for (Grid e : r.empties.grids()) {
        bool touches = false;
        int k = neighbors4(e, n, nb);
        for (int i = 0; i < k && !touches; ++i)
          if (pos.has_stone(nb[i], p) && block_id[nb[i].index(n)] == b) touches = true;
        if (!touches) { vital = false; break; }
      }
      if (vital) r.vital_to.push_back(b);
    }
    a.regions.push_back(std::move(r));
  }

  // Fixpoint: drop blocks with fewer than two live vital regions, then drop
  // regions bordered by a dropped block, until stable.
  a.block_safe.assign(a.blocks.size(), 1);
  a.region_alive.assign(a.regions.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t b = 0; b < a.blocks.size(); ++b) {
      if (!a.block_safe[b]) continue;
      int vitals = 0;
      for (size_t r = 0; r < a.regions.size(); ++r) {
        if (!a.region_alive[r]) continue;
        const auto& v = a.regions[r].vital_to;
        if (std::find(v.begin(), v.end(), static_cast<int>(b)) != v.end()) ++vitals;
      }
      if (vitals < 2) { a.block_safe[b] = 0; changed = true; }
    }
    for (size_t r = 0; r < a.regions.size(); ++r) {
      if (!a.region_alive[r]) continue;
      for (int b : a.regions[r].border) {
        if (!a.block_safe[b]) { a.region_alive[r] = 0; changed = true; break; }
      }
    }
  }

  for (size_t b = 0; b < a.blocks.size(); ++b)
    if (a.block_safe[b]) a.safe_stones |= a.blocks[b];
  return a;
}

uint64_t GoGoal::key(int n) const {
  uint64_t h = mix64(static_cast<uint64_t>(kind) * 2 + static_cast<uint64_t>(player) + 1);
  for (Grid g : crucial) h = mix64(h ^ (static_cast<uint64_t>(g.index(n)) + 0x100));
  return h;
}

namespace {

// Crucial grids that still carry a goal-player stone.
std::vector<Grid> live_crucial(const Position& pos, const GoGoal& goal) {
  std::vector<Grid> out;
  for (Grid g : goal.crucial)
    if (pos.has_stone(g, goal.player)) out.push_back(g);
  return out;
}

bool crucial_block_safe(const SafetyAnalysis& a, const Position& pos,
                        const GoGoal& goal) {
  for (Grid g : live_crucial(pos, goal))
    if (a.grid_safe(g)) return true;
  return false;
}

// Smallest set of blocks and regions that certifies safety of the seeds:
// every included block contributes all its live vital regions, every
// included region pulls in all its bordering blocks.
Zone closure_zone(const SafetyAnalysis& a, int n, const std::vector<int>& seed_blocks) {
  std::vector<char> in_block(a.blocks.size(), 0);
  std::vector<char> in_region(a.regions.size(), 0);
  std::vector<int> todo = seed_blocks;
  for (int b : seed_blocks) in_block[b] = 1;
  while (!todo.empty()) {
    int b = todo.back();
    todo.pop_back();
    for (size_t r = 0; r < a.regions.size(); ++r) {
      if (in_region[r] || !a.region_alive[r]) continue;
      const auto& v = a.regions[r].vital_to;
      if (std::find(v.begin(), v.end(), b) == v.end()) continue;
      in_region[r] = 1;
      for (int nb : a.regions[r].border) {
        if (!in_block[nb]) {
          in_block[nb] = 1;
          todo.push_back(nb);
        }
      }
    }
  }
  Zone z(n);
  for (size_t b = 0; b < a.blocks.size(); ++b)
    if (in_block[b]) z |= a.blocks[b];
  for (size_t r = 0; r < a.regions.size(); ++r)
    if (in_region[r]) z |= a.regions[r].grids;
  return z;
}

}  // namespace

GoalStatus go_goal_status(const Position& pos, const GoGoal& goal) {
  if (goal.kind == GoGoalKind::CrucialSafety) {
    auto alive = live_crucial(pos, goal);
    if (alive.empty()) return GoalStatus::Failed;
    SafetyAnalysis a = analyze_safety(pos, goal.player);
    if (crucial_block_safe(a, pos, goal)) return GoalStatus::Achieved;
    return GoalStatus::Open;
  }
  // KillAllDefense
  if (pos.stone_count(goal.player) == 0) return GoalStatus::Failed;
  SafetyAnalysis a = analyze_safety(pos, goal.player);
  for (char s : a.block_safe)
    if (s) return GoalStatus::Achieved;
  return GoalStatus::Open;
}

Zone go_leaf_rzone(const Position& pos, const GoGoal& goal) {
  const int n = pos.size();
  SafetyAnalysis a = analyze_safety(pos, goal.player);
  if (goal.kind == GoGoalKind::CrucialSafety) {
    std::vector<int> seeds;
    for (Grid g : live_crucial(pos, goal)) {
      if (!a.grid_safe(g)) continue;
      for (size_t b = 0; b < a.blocks.size(); ++b)
        if (a.block_safe[b] && a.blocks[b].contains(g)) {
          if (std::find(seeds.begin(), seeds.end(), static_cast<int>(b)) == seeds.end())
            seeds.push_back(static_cast<int>(b));
        }
    }
    if (seeds.empty()) throw InternalError("leaf zone requested on unachieved goal");
    return closure_zone(a, n, seeds);
  }
  // KillAllDefense: smallest single-block closure; ties break on the textual
  // form so the choice is deterministic.
  bool found = false;
  Zone best(n);
  for (size_t b = 0; b < a.blocks.size(); ++b) {
    if (!a.block_safe[b]) continue;
    Zone z = closure_zone(a, n, {static_cast<int>(b)});
    if (!found || z.count() < best.count() ||
        (z.count() == best.count() && z.to_string() < best.to_string())) {
      best = z;
      found = true;
    }
  }
  if (!found) throw InternalError("leaf zone requested on unachieved goal");
  return best;
}

}  // namespace rzs
