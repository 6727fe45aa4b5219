#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rzs/benson.h"
#include "rzs/board.h"
#include "rzs/hexgame.h"

namespace rzs {

enum class GameKind : uint8_t { Go, KillAllGo, Hex };

const char* game_kind_name(GameKind k);  // "go" | "killall" | "hex"
GameKind parse_game_kind(const std::string& name);

// A solvable problem: board setup plus goal. Setup lists are kept sorted and
// deduplicated so equal problems compare equal and serialization is stable.
struct ProblemSpec {
  GameKind game = GameKind::KillAllGo;
  int size = 7;
  std::vector<Grid> black_setup;
  std::vector<Grid> white_setup;
  PlayerColor to_move = PlayerColor::Black;
  std::vector<Grid> crucial;           // go (crucial-safety) and hex
  HexSide target = HexSide::Bottom;    // hex only
  std::string metadata;                // free-form provenance note

  Position position() const;
  GoGoal go_goal() const;   // go / killall only
  HexGoal hex_goal() const;  // hex only

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

// FF[4] subset: one root node with SZ, AB/AW, PL, MA (crucial marks), RU
// (rules name; "killall" selects the kill-all goal), GC (metadata). GM/FF/CA
// /AP/C are accepted and ignored; KM is ignored with a warning. Game kind:
// RU wins, otherwise marks present = crucial-safety go, no marks = kill-all.
ProblemSpec parse_sgf(const std::string& bytes,
                      std::vector<std::string>* warnings = nullptr);
std::string serialize_sgf(const ProblemSpec& spec);

// Hex problems use the plain-text board format.
ProblemSpec problem_from_hex(const HexProblem& prob);
HexProblem hex_problem(const ProblemSpec& spec);

// Reads a problem file, sniffing hex text vs SGF from the content (a leading
// '(' means SGF); `rules` overrides the game kind.
ProblemSpec load_problem_file(const std::string& path,
                              std::optional<GameKind> rules,
                              std::vector<std::string>* warnings = nullptr);
std::string serialize_problem(const ProblemSpec& spec);

}  // namespace rzs
