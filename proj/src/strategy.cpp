#include "lights/strategy.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "lights/algebra.hpp"

namespace lights {

namespace {

std::string multiset_key(const Position& p) {
  std::vector<std::string> parts;
  parts.reserve(p.components.size());
  for (const Component& c : p.components) {
    if (!c.empty()) parts.push_back(c.to_string());
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& part : parts) {
    key += part;
    key += '+';
  }
  return key;
}

std::size_t socket_count(const Position& p) {
  std::size_t count = 0;
  for (const Component& c : p.components) {
    for (Piece piece : c.pieces()) {
      if (piece == Piece::Socket) ++count;
    }
  }
  return count;
}

// Tries shock chains of exactly `shocks_left` moves, then one quiet/fix
// move onto a value-0 position. legal_moves enumerates in (component,
// index) order, so the first hit is the lexicographically least line of
// this length. Within one deepening pass a position is always reached at
// the same depth (each shock removes exactly one piece), so a plain
// visited set is a safe transposition prune.
std::optional<std::vector<Move>> search(const Position& p,
                                        std::size_t shocks_left,
                                        std::unordered_set<std::string>& visited) {
  if (shocks_left == 0) {
    for (const Move& move : legal_moves(p)) {
      if (move.kind == MoveKind::RemoveSocketShock) continue;
      if (position_value(apply(p, move)) == GrundyValue::finite(0)) {
        return std::vector<Move>{move};
      }
    }
    return std::nullopt;
  }
  if (!visited.insert(multiset_key(p)).second) return std::nullopt;
  for (const Move& move : legal_moves(p)) {
    if (move.kind != MoveKind::RemoveSocketShock) continue;
    if (auto rest = search(apply(p, move), shocks_left - 1, visited)) {
      rest->insert(rest->begin(), move);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<WinningLine> best_line(const Position& p) {
  if (position_value(p) == GrundyValue::finite(0)) return std::nullopt;
  // An N-position always has a winning turn of this shape, and a shock
  // chain can be no longer than the socket count.
  const std::size_t max_shocks = socket_count(p);
  for (std::size_t shocks = 0; shocks <= max_shocks; ++shocks) {
    std::unordered_set<std::string> visited;
    if (auto moves = search(p, shocks, visited)) {
      return WinningLine{std::move(*moves)};
    }
  }
  return std::nullopt;  // not reachable from an N-position
}

bool validate_line(const Position& p, const WinningLine& line) {
  if (line.moves.empty()) return false;
  Position current = p;
  for (std::size_t i = 0; i < line.moves.size(); ++i) {
    const Move& move = line.moves[i];
    const bool last = i + 1 == line.moves.size();
    if (last == (move.kind == MoveKind::RemoveSocketShock)) return false;
    if (!is_legal(current, move)) return false;
    current = apply(current, move);
  }
  return position_value(current) == GrundyValue::finite(0);
}

}  // namespace lights
