#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rzs/board.h"

namespace rzs {

// Move-ordering policy. `lex` sorts by coordinates; `liberty` ranks by a
// contact heuristic (see each game's scorer); `file` reads an external
// priority file — the plug-point for learned or hand-crafted orderings.
//
// File format, one directive per line ('#' comments):
//   <move>                 appended to the global priority list
//   reply <move> <m1> ...  preferred answers when the opponent just played <move>
// Moves use board coordinates ("D2") or "pass".
struct MoveOrdering {
  enum class Policy { Lex, Liberty, File };
  Policy policy = Policy::Liberty;
  std::vector<Move> global;
  std::vector<std::pair<Move, std::vector<Move>>> replies;
  std::string source_path;

  static MoveOrdering lex() { return {Policy::Lex, {}, {}, {}}; }
  static MoveOrdering liberty() { return {Policy::Liberty, {}, {}, {}}; }
  static MoveOrdering from_file(const std::string& path, int board_size);

  // "lex", "liberty", or "file:<path>" — the stable form used in CLI flags
  // and proof headers.
  std::string describe() const;
  static MoveOrdering parse(const std::string& text, int board_size);
};

// Deterministic permutation of `moves`. Buckets: file reply matches for
// `last_move`, then file global entries, then everything else ranked by
// `score` (higher first; lex policy ignores scores). Ties break by
// (row, column); pass sorts last within its bucket.
std::vector<Move> order_moves(std::vector<Move> moves, const MoveOrdering& ord,
                              const std::function<int(Move)>& score,
                              std::optional<Move> last_move);

}  // namespace rzs
