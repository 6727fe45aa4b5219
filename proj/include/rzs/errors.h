#pragma once

#include <stdexcept>
#include <string>

namespace rzs {

// Malformed input files, bad coordinates, unsupported properties.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Replay was asked to run against a position that does not match the
// certificate's zone pattern (or has the wrong player to move).
struct PatternMismatch : std::runtime_error {
  explicit PatternMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Bad SGF syntax; carries the byte offset where parsing gave up.
struct MalformedSgf : ParseError {
  size_t offset;
  MalformedSgf(const std::string& what, size_t at)
      : ParseError(what + " (at byte " + std::to_string(at) + ")"),
        offset(at) {}
};

// SGF that parses but describes an unusable problem (overlapping setup
// stones, crucial marks on empty grids, and the like).
struct InconsistentSetup : ParseError {
  explicit InconsistentSetup(const std::string& what) : ParseError(what) {}
};

// A move that the rules forbid was handed to an operation requiring legality.
struct IllegalMoveError : std::runtime_error {
  explicit IllegalMoveError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant violations surface as this rather than UB.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rzs
