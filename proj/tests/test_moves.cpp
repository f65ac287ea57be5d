#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lights/moves.hpp"
#include "test_util.hpp"

using namespace lights;
using lights_test::all_components;
using lights_test::comp;
using lights_test::pos;

TEST_CASE("move enumeration classifies every piece") {
  CHECK(legal_moves(comp("bsb")) ==
        std::vector<Move>{{MoveKind::FixBulb, 0},
                          {MoveKind::RemoveSocketShock, 1},
                          {MoveKind::FixBulb, 2}});
  CHECK(legal_moves(comp("sss")) ==
        std::vector<Move>{{MoveKind::RemoveSocketQuiet, 0},
                          {MoveKind::RemoveSocketQuiet, 1},
                          {MoveKind::RemoveSocketQuiet, 2}});
  CHECK(legal_moves(comp("sbs")) ==
        std::vector<Move>{{MoveKind::RemoveSocketQuiet, 0},
                          {MoveKind::FixBulb, 1},
                          {MoveKind::RemoveSocketQuiet, 2}});
  CHECK(legal_moves(Component{}).empty());
}

TEST_CASE("a socket shocks only between two bulbs") {
  const Component c = comp("bbssbbsbbs");
  CHECK(socket_move_kind(c, 2) == MoveKind::RemoveSocketQuiet);  // bulb, socket
  CHECK(socket_move_kind(c, 3) == MoveKind::RemoveSocketQuiet);  // socket, bulb
  CHECK(socket_move_kind(c, 6) == MoveKind::RemoveSocketShock);  // bulb, bulb
  CHECK(socket_move_kind(c, 9) == MoveKind::RemoveSocketQuiet);  // right end
}

TEST_CASE("apply semantics on the ruleset's demo component") {
  const Component c = comp("bbssbbsbbs");
  CHECK(apply(c, {MoveKind::FixBulb, 4}).to_string() == "bbss");
  CHECK(apply(c, {MoveKind::FixBulb, 7}).to_string() == "bbssbbs");
  CHECK(apply(c, {MoveKind::RemoveSocketQuiet, 3}).to_string() == "bbsbbsbbs");
  CHECK(apply(c, {MoveKind::RemoveSocketShock, 6}).to_string() == "bbssbbbbs");
  CHECK(apply(comp("b"), {MoveKind::FixBulb, 0}).empty());
}

TEST_CASE("illegal moves are rejected") {
  const Component c = comp("bbssbbsbbs");
  CHECK_FALSE(is_legal(c, {MoveKind::FixBulb, 6}));  // socket at 6
  CHECK_THROWS_AS(apply(c, {MoveKind::FixBulb, 6}), std::invalid_argument);
  CHECK_FALSE(is_legal(c, {MoveKind::RemoveSocketQuiet, 6}));  // shocks there
  CHECK_FALSE(is_legal(c, {MoveKind::RemoveSocketShock, 3}));
  CHECK_FALSE(is_legal(c, {MoveKind::FixBulb, 10}));  // out of bounds
  CHECK_FALSE(is_legal(pos("b + b"), {MoveKind::FixBulb, 0, 2}));
  CHECK_THROWS_AS(apply(pos("b"), {MoveKind::FixBulb, 0, 1}), std::invalid_argument);
}

TEST_CASE("position-level enumeration and application") {
  CHECK(legal_moves(pos("b + b")) ==
        std::vector<Move>{{MoveKind::FixBulb, 0, 0}, {MoveKind::FixBulb, 0, 1}});
  CHECK(legal_moves(pos("0")).empty());
  CHECK(legal_moves(pos("b2s3b5s1b4s2b2 + b2s1b3s1b1s3b1")).size() == 31);

  const Position showcase = pos("b2s3b5s1b4s2b2 + b2s1b3s1b1s3b1");
  const Position after = apply(showcase, {MoveKind::RemoveSocketShock, 2, 1});
  CHECK(after.components[0] == showcase.components[0]);
  CHECK(after.components[1].to_string() == "bbbbbsbsssb");

  // Emptied components stay in place so later indices are stable.
  const Position drained = apply(pos("b + b"), {MoveKind::FixBulb, 0, 0});
  REQUIRE(drained.components.size() == 2);
  CHECK(drained.components[0].empty());
  CHECK(legal_moves(drained) == std::vector<Move>{{MoveKind::FixBulb, 0, 1}});
}

TEST_CASE("every move strictly shrinks the component") {
  for (const Component& c : all_components(9)) {
    for (const Move& move : legal_moves(c)) {
      const Component next = apply(c, move);
      if (move.kind == MoveKind::FixBulb) {
        CHECK(next.size() < c.size());
        CHECK(next.size() == move.index);
      } else {
        CHECK(next.size() == c.size() - 1);
      }
    }
  }
}

TEST_CASE("a shock leaves both sandwiching bulbs behind") {
  for (const Component& c : all_components(9)) {
    for (const Move& move : legal_moves(c)) {
      if (move.kind != MoveKind::RemoveSocketShock) continue;
      const Component next = apply(c, move);
      CHECK_FALSE(next.empty());
      std::size_t bulbs = 0;
      for (Piece p : next.pieces()) bulbs += p == Piece::Bulb;
      CHECK(bulbs >= 2);
    }
  }
}

TEST_CASE("shock classification is local") {
  for (const Component& c : all_components(8, 1)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != Piece::Socket) continue;
      const MoveKind kind = socket_move_kind(c, i);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (j + 2 > i && j < i + 2) continue;  // within distance 1
        std::vector<Piece> pieces = c.pieces();
        pieces[j] = pieces[j] == Piece::Bulb ? Piece::Socket : Piece::Bulb;
        CHECK(socket_move_kind(Component(pieces), i) == kind);
      }
    }
  }
}
