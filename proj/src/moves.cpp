#include "lights/moves.hpp"

#include <stdexcept>

namespace lights {

const char* kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::FixBulb: return "fix";
    case MoveKind::RemoveSocketQuiet: return "quiet";
    case MoveKind::RemoveSocketShock: return "shock";
  }
  return "?";
}

std::string describe(const Move& move) {
  std::string action;
  switch (move.kind) {
    case MoveKind::FixBulb:
      action = "fix: replace bulb ";
      break;
    case MoveKind::RemoveSocketQuiet:
      action = "quiet: remove socket ";
      break;
    case MoveKind::RemoveSocketShock:
      action = "shock: remove socket ";
      break;
  }
  return action + std::to_string(move.index) + " in component " +
         std::to_string(move.component);
}

MoveKind socket_move_kind(const Component& c, std::size_t i) {
  const bool sandwiched = i > 0 && i + 1 < c.size() &&
                          c[i - 1] == Piece::Bulb && c[i + 1] == Piece::Bulb;
  return sandwiched ? MoveKind::RemoveSocketShock : MoveKind::RemoveSocketQuiet;
}

std::vector<Move> legal_moves(const Component& c) {
  std::vector<Move> moves;
  moves.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Piece::Bulb) {
      moves.push_back({MoveKind::FixBulb, i, 0});
    } else {
      moves.push_back({socket_move_kind(c, i), i, 0});
    }
  }
  return moves;
}

std::vector<Move> legal_moves(const Position& p) {
  std::vector<Move> moves;
  moves.reserve(p.total_pieces());
  for (std::size_t ci = 0; ci < p.components.size(); ++ci) {
    for (Move move : legal_moves(p.components[ci])) {
      move.component = ci;
      moves.push_back(move);
    }
  }
  return moves;
}

bool is_legal(const Component& c, const Move& move) {
  if (move.index >= c.size()) return false;
  if (move.kind == MoveKind::FixBulb) return c[move.index] == Piece::Bulb;
  return c[move.index] == Piece::Socket &&
         socket_move_kind(c, move.index) == move.kind;
}

bool is_legal(const Position& p, const Move& move) {
  return move.component < p.components.size() &&
         is_legal(p.components[move.component], move);
}

Component apply(const Component& c, const Move& move) {
  if (!is_legal(c, move)) {
    throw std::invalid_argument("illegal move: " + describe(move) + " on '" +
                                c.to_string() + "'");
  }
  const std::vector<Piece>& pieces = c.pieces();
  if (move.kind == MoveKind::FixBulb) {
    // The chosen bulb and everything to its right leave the game.
    return Component(std::vector<Piece>(pieces.begin(), pieces.begin() + move.index));
  }
  std::vector<Piece> out;
  out.reserve(pieces.size() - 1);
  out.insert(out.end(), pieces.begin(), pieces.begin() + move.index);
  out.insert(out.end(), pieces.begin() + move.index + 1, pieces.end());
  return Component(std::move(out));
}

Position apply(const Position& p, const Move& move) {
  if (move.component >= p.components.size()) {
    throw std::invalid_argument("illegal move: no component " +
                                std::to_string(move.component));
  }
  Position out = p;
  out.components[move.component] = apply(out.components[move.component], move);
  return out;
}

}  // namespace lights
