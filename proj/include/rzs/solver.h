#pragma once

#include <algorithm>
#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rzs/errors.h"
#include "rzs/game.h"
#include "rzs/ordering.h"

namespace rzs {

enum class SolveStatus : uint8_t { Win, Fail, Unknown };

inline const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Win: return "WIN";
    case SolveStatus::Fail: return "FAIL";
    case SolveStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

struct SearchBudget {
  uint64_t max_nodes = 500000;
  int max_depth = 0;  // 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchStats {
  uint64_t nodes = 0;     // solver entries that got past the table probe
  uint64_t expanded = 0;  // entries that generated children (non-leaf)
  uint64_t tt_hits = 0;
  int max_depth = 0;
};

// Proof tree. Each edge records whether the proven child's zone excludes the
// move played ("null move"): such a proof holds no matter which out-of-zone
// move the opponent actually chose, which is what lets replay answer
// arbitrary opponent play.
struct RzstNode;

struct RzstEdge {
  Move move;
  bool null_move = false;
  std::shared_ptr<const RzstNode> child;
};

struct RzstNode {
  enum class Kind : uint8_t { Leaf, Or, And };
  Kind kind = Kind::Leaf;
  uint64_t position_hash = 0;
  Zone rz;
  std::vector<RzstEdge> edges;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  Zone rz;
  std::shared_ptr<const RzstNode> tree;  // set on Win
  SearchStats stats;
  // A Fail that leaned on the no-repetition cut somewhere; such verdicts
  // depend on the superko convention, unlike Win proofs, which never do.
  bool repetition_caveat = false;
};

// Shared solved-position cache keyed by position-hash ^ goal-key. Striped
// locks so concurrent solvers can share one table.
class TranspositionTable {
 public:
  struct Entry {
    SolveStatus status = SolveStatus::Unknown;
    Zone rz;
    std::shared_ptr<const RzstNode> tree;
  };

  explicit TranspositionTable(size_t shard_count = 64);
  TranspositionTable(const TranspositionTable&) = delete;
  TranspositionTable& operator=(const TranspositionTable&) = delete;

  std::optional<Entry> probe(uint64_t key) const;
  void store(uint64_t key, Entry e);
  size_t size() const;

 private:
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<uint64_t, Entry> map;
  };
  size_t mask_;
  std::unique_ptr<Shard[]> shards_;
};

struct SearchConfig {
  SearchBudget budget;
  MoveOrdering ordering = MoveOrdering::liberty();
  bool and_player_may_pass = true;  // keeps a null answer available everywhere
  bool or_player_may_pass = false;
  bool zone_pruning = true;  // off = plain proof-number-free DFS baseline
};

// Goal-achievement search. OR nodes belong to the goal player and need one
// winning move; AND nodes must refute every move left in the must-play set,
// which shrinks to a proven child's zone whenever that zone excludes the move
// just refuted.
template <class Game>
class Solver {
 public:
  Solver(typename Game::Goal goal, SearchConfig cfg,
         TranspositionTable* table = nullptr)
      : goal_(std::move(goal)), cfg_(std::move(cfg)), shared_table_(table) {}

  SolveResult solve(const Position& root) {
    stats_ = SearchStats{};
    path_.clear();
    std::unique_ptr<TranspositionTable> local;
    if (shared_table_) {
      table_ = shared_table_;
    } else {
      local = std::make_unique<TranspositionTable>();
      table_ = local.get();
    }
    goal_key_ = Game::goal_key(goal_, root.size());
    or_player_ = Game::or_player(goal_);
    Out out = achieve(root, 0, std::nullopt);
    SolveResult res;
    res.status = out.status;
    res.rz = out.status == SolveStatus::Win ? out.rz : Zone(root.size());
    res.tree = out.node;
    res.stats = stats_;
    res.repetition_caveat = out.status == SolveStatus::Fail && out.taint;
    table_ = nullptr;
    return res;
  }

 private:
  struct Out {
    SolveStatus status = SolveStatus::Unknown;
    Zone rz;
    std::shared_ptr<const RzstNode> node;
    bool taint = false;
  };

  Out achieve(const Position& p, int depth, std::optional<Move> last_move) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (stats_.nodes >= cfg_.budget.max_nodes) return {};
    if (cfg_.budget.max_depth > 0 && depth > cfg_.budget.max_depth) return {};
    if (cfg_.budget.deadline &&
        std::chrono::steady_clock::now() > *cfg_.budget.deadline)
      return {};

    if constexpr (Game::kHasRepetition) {
      for (uint64_t h : path_)
        if (h == p.hash()) {
          Out out;
          out.status = SolveStatus::Fail;
          out.taint = true;
          return out;
        }
    }

    const uint64_t key = p.hash() ^ goal_key_;
    if (auto hit = table_->probe(key)) {
      ++stats_.tt_hits;
      Out out;
      out.status = hit->status;
      out.rz = hit->rz;
      out.node = hit->tree;
      return out;
    }
    ++stats_.nodes;

    switch (Game::status(p, goal_)) {
      case GoalStatus::Achieved: {
        auto node = std::make_shared<RzstNode>();
        node->kind = RzstNode::Kind::Leaf;
        node->position_hash = p.hash();
        node->rz = Game::leaf_zone(p, goal_);
        table_->store(key, {SolveStatus::Win, node->rz, node});
        return {SolveStatus::Win, node->rz, std::move(node), false};
      }
      case GoalStatus::Failed: {
        table_->store(key, {SolveStatus::Fail, Zone(p.size()), nullptr});
        Out out;
        out.status = SolveStatus::Fail;
        return out;
      }
      case GoalStatus::Open: break;
    }

    ++stats_.expanded;
    const bool or_node = p.to_move() == or_player_;
    std::vector<Move> moves = Game::legal_moves(
        p, or_node ? cfg_.or_player_may_pass : cfg_.and_player_may_pass);
    moves = order_moves(std::move(moves), cfg_.ordering,
                        Game::make_scorer(p, goal_), last_move);

    if constexpr (Game::kHasRepetition) path_.push_back(p.hash());
    Out out = or_node ? search_or(p, depth, moves)
                      : search_and(p, depth, moves);
    if constexpr (Game::kHasRepetition) path_.pop_back();

    if (out.status != SolveStatus::Unknown && !out.taint) {
      table_->store(key, {out.status,
                          out.status == SolveStatus::Win ? out.rz : Zone(p.size()),
                          out.node});
    }
    return out;
  }

  // Winning moves that reach the goal outright jump the queue, smallest leaf
  // zone first, so the proof records the tightest zone available.
  void hoist_instant_wins(const Position& p, std::vector<Move>& moves) {
    struct Inst {
      size_t zone_count;
      std::string zone_text;
      size_t idx;
    };
    std::vector<Inst> instants;
    for (size_t i = 0; i < moves.size(); ++i) {
      if (moves[i].pass) continue;
      Position child = p;
      if (!Game::try_play(child, moves[i])) throw InternalError("bad move gen");
      if (Game::status(child, goal_) == GoalStatus::Achieved) {
        Zone z = Game::leaf_zone(child, goal_);
        instants.push_back({z.count(), z.to_string(), i});
      }
    }
    if (instants.empty()) return;
    std::sort(instants.begin(), instants.end(), [](const Inst& a, const Inst& b) {
      if (a.zone_count != b.zone_count) return a.zone_count < b.zone_count;
      if (a.zone_text != b.zone_text) return a.zone_text < b.zone_text;
      return a.idx < b.idx;
    });
    std::vector<char> is_instant(moves.size(), 0);
    for (const Inst& in : instants) is_instant[in.idx] = 1;
    std::vector<Move> reordered;
    reordered.reserve(moves.size());
    for (const Inst& in : instants) reordered.push_back(moves[in.idx]);
    for (size_t i = 0; i < moves.size(); ++i)
      if (!is_instant[i]) reordered.push_back(moves[i]);
    moves = std::move(reordered);
  }

  Out search_or(const Position& p, int depth, std::vector<Move>& moves) {
    hoist_instant_wins(p, moves);
    bool taint = false;
    bool saw_unknown = false;
    for (Move m : moves) {
      Position child = p;
      if (!Game::try_play(child, m)) throw InternalError("bad move gen");
      Out sub = achieve(child, depth + 1, m);
      if (sub.status == SolveStatus::Win) {
        Out out;
        out.status = SolveStatus::Win;
        out.rz = Game::dilate_winning_move(p, m, sub.rz);
        auto node = std::make_shared<RzstNode>();
        node->kind = RzstNode::Kind::Or;
        node->position_hash = p.hash();
        node->rz = out.rz;
        node->edges.push_back({m, false, std::move(sub.node)});
        out.node = std::move(node);
        return out;
      }
      if (sub.status == SolveStatus::Unknown) saw_unknown = true;
      taint = taint || sub.taint;
    }
    Out out;
    if (saw_unknown) return out;
    out.status = SolveStatus::Fail;
    out.taint = taint;
    return out;
  }

  Out search_and(const Position& p, int depth, std::vector<Move>& moves) {
    const int n = p.size();
    std::vector<char> removed(moves.size(), 0);
    Zone acc(n);
    std::vector<RzstEdge> edges;
    bool saw_unknown = false;
    for (;;) {
      size_t pick = moves.size();
      for (size_t i = 0; i < moves.size(); ++i)
        if (!removed[i]) {
          pick = i;
          break;
        }
      if (pick == moves.size()) break;
      Move m = moves[pick];
      Position child = p;
      if (!Game::try_play(child, m)) throw InternalError("bad move gen");
      Out sub = achieve(child, depth + 1, m);
      if (sub.status == SolveStatus::Fail) {
        Out out;
        out.status = SolveStatus::Fail;
        out.taint = sub.taint;
        return out;
      }
      if (sub.status == SolveStatus::Unknown) {
        saw_unknown = true;
        removed[pick] = 1;
        continue;
      }
      acc |= sub.rz;
      const bool null_move = m.pass || !sub.rz.contains(m.grid);
      if (null_move && cfg_.zone_pruning) {
        // Must-play intersection: refuting an out-of-zone move refutes every
        // move outside the child's zone at once.
        for (size_t i = 0; i < moves.size(); ++i)
          if (!removed[i] && (moves[i].pass || !sub.rz.contains(moves[i].grid)))
            removed[i] = 1;
      } else {
        removed[pick] = 1;
      }
      edges.push_back({m, null_move, std::move(sub.node)});
    }
    Out out;
    if (saw_unknown) return out;
    out.status = SolveStatus::Win;
    out.rz = Game::dilate_union(p, acc);
    auto node = std::make_shared<RzstNode>();
    node->kind = RzstNode::Kind::And;
    node->position_hash = p.hash();
    node->rz = out.rz;
    node->edges = std::move(edges);
    out.node = std::move(node);
    return out;
  }

  typename Game::Goal goal_;
  SearchConfig cfg_;
  TranspositionTable* shared_table_ = nullptr;
  TranspositionTable* table_ = nullptr;
  uint64_t goal_key_ = 0;
  PlayerColor or_player_ = PlayerColor::White;
  SearchStats stats_;
  std::vector<uint64_t> path_;
};

using GoSolver = Solver<GoGame>;
using HexSolver = Solver<HexGame>;

}  // namespace rzs
