// Ruleset semantics: the three move types and their application.
//
//  - fixing a bulb repairs it and everything to its right, so the component
//    shrinks to the strict prefix before the bulb;
//  - removing a socket deletes that one piece and joins the ends;
//  - a socket removal is a shock (carry-on: the mover must move again) iff
//    both immediate neighbors exist and are bulbs.

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "lights/component.hpp"

namespace lights {

enum class MoveKind { FixBulb, RemoveSocketQuiet, RemoveSocketShock };

// "fix", "quiet" or "shock" (the wire names).
const char* kind_name(MoveKind kind);

struct Move {
  MoveKind kind;
  std::size_t index;          // piece index within the component
  std::size_t component = 0;  // component index within a Position

  bool operator==(const Move&) const = default;
};

std::string describe(const Move& move);

inline std::ostream& operator<<(std::ostream& os, const Move& move) {
  return os << kind_name(move.kind) << "(" << move.component << ","
            << move.index << ")";
}

// Classification of a socket removal. Pre: c[i] is a Socket.
MoveKind socket_move_kind(const Component& c, std::size_t i);

// One move per piece, in index order: FixBulb for bulbs, the classified
// removal for sockets. Empty list iff the component is empty.
std::vector<Move> legal_moves(const Component& c);

// Union over components in (component, index) order. Components that have
// become empty contribute nothing.
std::vector<Move> legal_moves(const Position& p);

bool is_legal(const Component& c, const Move& move);
bool is_legal(const Position& p, const Move& move);

// Throws std::invalid_argument if the move is not legal.
Component apply(const Component& c, const Move& move);

// Applies within the addressed component; components stay in place (possibly
// empty) so indices in multi-move lines remain stable.
Position apply(const Position& p, const Move& move);

}  // namespace lights
