// Winning-turn synthesis. A turn is zero or more shock moves (each one
// keeps the turn) followed by exactly one quiet/fix move; for an N-position
// there is always such a turn ending on a value-0 position.

#pragma once

#include <optional>
#include <vector>

#include "lights/component.hpp"
#include "lights/moves.hpp"

namespace lights {

struct WinningLine {
  std::vector<Move> moves;  // all shocks except the last, which is quiet/fix

  bool operator==(const WinningLine&) const = default;
};

// Returns a winning turn iff the position is an N-position, nullopt iff it
// is a P-position. Deterministic: iterative deepening on the number of
// shocks, moves tried in (component, index) order, so the returned line is
// the lexicographically least one with the fewest shocks.
std::optional<WinningLine> best_line(const Position& p);

// True iff the line has the shocks-then-one-quiet shape, every move is
// legal when reached, and the final position has value Finite(0).
bool validate_line(const Position& p, const WinningLine& line);

}  // namespace lights
