#pragma once

#include <functional>
#include <map>
#include <string>

#include "rzs/benson.h"
#include "rzs/board.h"
#include "rzs/hexgame.h"

namespace rzs {

// Brute-force reference for cross-checking search verdicts: full-width
// AND-OR minimax over the same goal predicates and pass conventions, but with
// no solved-position cache, no zones, and no pruning beyond terminal goals.
// Kept deliberately separate from the solver so the two can disagree.

enum class OracleVerdict : uint8_t { Win, Fail, Unknown };

inline char oracle_verdict_char(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Win: return 'W';
    case OracleVerdict::Fail: return 'F';
    case OracleVerdict::Unknown: return 'U';
  }
  return '?';
}

struct OracleOptions {
  int max_depth = 6;  // plies; deeper positions come back Unknown
  uint64_t max_nodes = ~0ull;
  bool and_player_may_pass = true;
  bool or_player_may_pass = false;
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::Unknown;
  uint64_t nodes = 0;
};

OracleResult oracle_go(const Position& p, const GoGoal& goal,
                       const OracleOptions& opt = {});
OracleResult oracle_hex(const Position& p, const HexGoal& goal,
                        const OracleOptions& opt = {});

// Board sweeps for equivalence testing. Positions are produced with the
// given player to move; go allows both players, hex only count-plausible
// ones. Boards with libertyless blocks (go) are skipped.
void for_each_go_position(int n, int max_stones,
                          const std::function<void(const Position&)>& fn);
void for_each_hex_position(int n, int max_stones,
                           const std::function<void(const Position&)>& fn);

// Verdict cache: text lines "<position-hash> <verdict-letter> <depth>",
// sorted by hash so regenerated files diff cleanly.
std::map<uint64_t, std::pair<char, int>> load_oracle_cache(
    const std::string& path);
void save_oracle_cache(const std::string& path,
                       const std::map<uint64_t, std::pair<char, int>>& cache);

}  // namespace rzs
