#pragma once

#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rzs/solver.h"

namespace rzs {

// Options for proof replay. On boards larger than `exhaustive_max_size` the
// adversary-move enumeration at each defended node is sampled instead of
// exhausted.
struct ReplayOptions {
  int exhaustive_max_size = 5;
  size_t samples = 100;
  uint64_t seed = 0xC0FFEEULL;
};

namespace detail {

template <class Game>
bool replay_node(const RzstNode& node, const typename Game::Goal& goal,
                 const Position& p, const ReplayOptions& opt,
                 std::mt19937_64& rng,
                 std::unordered_map<const RzstNode*,
                                    std::unordered_set<uint64_t>>& memo) {
  auto& seen = memo[&node];
  if (seen.count(p.hash())) return true;
  bool ok = false;
  switch (node.kind) {
    case RzstNode::Kind::Leaf:
      ok = Game::status(p, goal) == GoalStatus::Achieved;
      break;
    case RzstNode::Kind::Or: {
      if (node.edges.empty() || !node.edges.front().child) return false;
      const RzstEdge& e = node.edges.front();
      Position child = p;
      if (!Game::try_play(child, e.move)) return false;
      ok = replay_node<Game>(*e.child, goal, child, opt, rng, memo);
      break;
    }
    case RzstNode::Kind::And: {
      std::vector<Move> advs = Game::legal_moves(p, /*include_pass=*/true);
      if (p.size() > opt.exhaustive_max_size && advs.size() > opt.samples) {
        std::shuffle(advs.begin(), advs.end(), rng);
        advs.resize(opt.samples);
      }
      ok = true;
      for (Move a : advs) {
        const RzstNode* next = nullptr;
        for (const RzstEdge& e : node.edges)
          if (e.move == a && e.child) {
            next = e.child.get();
            break;
          }
        if (!next) {
          // An out-of-zone move cannot disturb a null child's proof; answer
          // it with that child's strategy.
          for (const RzstEdge& e : node.edges)
            if (e.null_move && e.child &&
                (a.pass || !e.child->rz.contains(a.grid))) {
              next = e.child.get();
              break;
            }
        }
        if (!next) {
          ok = false;
          break;
        }
        Position child = p;
        if (!Game::try_play(child, a)) throw InternalError("bad replay move");
        if (!replay_node<Game>(*next, goal, child, opt, rng, memo)) {
          ok = false;
          break;
        }
      }
      break;
    }
  }
  if (ok) seen.insert(p.hash());
  return ok;
}

}  // namespace detail

// Replays a stored win proof against any position agreeing with the proof
// zone. Throws PatternMismatch when the target position differs inside the
// zone (or moves first with the wrong player); returns false when the proof
// fails to cover actual play — which a sound proof never does.
template <class Game>
bool verify_replay(const RzstNode& tree, const typename Game::Goal& goal,
                   const Position& root_p, const Position& p_star,
                   const ReplayOptions& opt = {}) {
  if (root_p.size() != p_star.size() || root_p.to_move() != p_star.to_move() ||
      !root_p.same_pattern(p_star, tree.rz))
    throw PatternMismatch("replay target disagrees with the proof zone");
  std::mt19937_64 rng(opt.seed);
  std::unordered_map<const RzstNode*, std::unordered_set<uint64_t>> memo;
  return detail::replay_node<Game>(tree, goal, p_star, opt, rng, memo);
}

namespace detail {

template <class Game>
bool check_cr_node(const RzstNode& node, const Position& p,
                   const Position& ps, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why && why->empty()) *why = msg;
    return false;
  };
  switch (node.kind) {
    case RzstNode::Kind::Leaf:
      return true;
    case RzstNode::Kind::Or: {
      if (node.edges.empty() || !node.edges.front().child)
        return fail("winning node without a stored move");
      const RzstEdge& e = node.edges.front();
      Position p2 = p, ps2 = ps;
      if (!Game::try_play(p2, e.move))
        throw InternalError("stored move illegal on its own position");
      if (!Game::try_play(ps2, e.move))
        return fail("stored winning move " + e.move.to_string() +
                    " illegal on the variant position");
      if (!p2.same_pattern(ps2, node.rz))
        return fail("winning move " + e.move.to_string() +
                    " changes the zone pattern differently on the variant");
      return check_cr_node<Game>(*e.child, p2, ps2, why);
    }
    case RzstNode::Kind::And: {
      for (Move a : Game::legal_moves(ps, /*include_pass=*/false)) {
        if (node.rz.contains(a.grid)) {
          Position pc = p;
          if (!Game::try_play(pc, a))
            return fail("in-zone move " + a.to_string() +
                        " legal on the variant but not the original");
          Position psc = ps;
          if (!Game::try_play(psc, a)) throw InternalError("legal move failed");
          if (!pc.same_pattern(psc, node.rz))
            return fail("in-zone move " + a.to_string() +
                        " leaves different zone patterns");
        } else {
          Position psc = ps;
          if (!Game::try_play(psc, a)) throw InternalError("legal move failed");
          if (!psc.same_pattern(ps, node.rz))
            return fail("out-of-zone move " + a.to_string() +
                        " disturbs the zone pattern");
        }
      }
      for (const RzstEdge& e : node.edges) {
        if (!e.child) return fail("defended node with missing child proof");
        Position p2 = p, ps2 = ps;
        if (!Game::try_play(p2, e.move))
          throw InternalError("stored move illegal on its own position");
        if (!Game::try_play(ps2, e.move))
          return fail("stored answer-branch move " + e.move.to_string() +
                      " illegal on the variant position");
        if (!check_cr_node<Game>(*e.child, p2, ps2, why)) return false;
      }
      return true;
    }
  }
  return fail("corrupt proof node");
}

}  // namespace detail

// Structural consistency audit: walks the proof tree in lockstep on the
// original position and a zone-equal variant, checking that in-zone play is
// identical on both (legality and resulting zone patterns) and out-of-zone
// play cannot disturb any node's zone. These are exactly the properties the
// replay argument relies on.
template <class Game>
bool check_cr_conditions(const RzstNode& tree, const Position& root_p,
                         const Position& p_star, std::string* why = nullptr) {
  if (root_p.size() != p_star.size() || root_p.to_move() != p_star.to_move() ||
      !root_p.same_pattern(p_star, tree.rz))
    throw PatternMismatch("variant disagrees with the proof zone");
  if (why) why->clear();
  return detail::check_cr_node<Game>(tree, root_p, p_star, why);
}

// Enumerates positions that agree with `p` inside `zone`, vary outside it,
// keep the same player to move, and respect the game's placement invariants.
// When full enumeration exceeds `exhaustive_limit` assignments, falls back to
// every 1- and 2-cell change plus `samples` seeded random assignments.
struct VariantOptions {
  size_t exhaustive_limit = 200000;
  size_t samples = 5000;
  uint64_t seed = 0xA11CEULL;
};

void for_each_go_variant(const Position& p, const Zone& zone,
                         const VariantOptions& opt,
                         const std::function<void(const Position&)>& fn);
void for_each_hex_variant(const Position& p, const Zone& zone,
                          const VariantOptions& opt,
                          const std::function<void(const Position&)>& fn);

// Placement invariants used by the variant generators (and tests): every
// block keeps a liberty in go; stone counts stay alternation-plausible in
// hex.
bool go_position_plausible(const Position& p);
bool hex_position_plausible(const Position& p);

}  // namespace rzs
