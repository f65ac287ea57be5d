// Domain types for the christmas lights fixture game: pieces, components,
// positions, and the two textual notations (char form "bbs", run form "b2s1").
//
// A component is one damaged stretch of a fixture, read left to right with
// the left end nearest the plug. Working bulbs never appear; the game only
// sees broken-but-replaceable bulbs and broken sockets.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lights {

enum class Piece : char { Bulb = 'b', Socket = 's' };

// Maximal run of equal pieces; a component's runs strictly alternate.
struct Run {
  Piece kind;
  std::size_t length = 0;

  bool operator==(const Run&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}

  // Byte offset of the offending character in the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class Component {
 public:
  Component() = default;
  explicit Component(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

  std::size_t size() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }
  Piece operator[](std::size_t i) const { return pieces_[i]; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // Maximal alternating run decomposition; concatenating the runs
  // reproduces the pieces exactly.
  std::vector<Run> runs() const;

  std::string to_string() const;  // canonical char form, e.g. "bbsb"
  std::string run_form() const;   // e.g. "b2s1b1"

  bool operator==(const Component&) const = default;

 private:
  std::vector<Piece> pieces_;
};

// Ordered list of independent summands. Order is kept for reporting only;
// it never affects values.
struct Position {
  std::vector<Component> components;

  std::size_t total_pieces() const;
  std::string to_string() const;  // components joined by " + "; "0" if none

  bool operator==(const Position&) const = default;
};

// Accepts the char form ([bs]*) or, if any digit is present, the run form
// ((b<uint>|s<uint>)+ with uint >= 1). Throws ParseError with the byte
// offset of the first offending character.
Component parse_component(std::string_view text);

// Components separated by '+', surrounding whitespace ignored; the single
// token "0" denotes the empty position.
Position parse_position(std::string_view text);

// The per-component slices of a position's text, trimmed, with the offset
// of each slice in the original text. Empty for "0".
struct Fragment {
  std::string text;
  std::size_t offset = 0;
};
std::vector<Fragment> position_fragments(std::string_view text);

// Small builders for composing components programmatically.
Component repeated(Piece kind, std::size_t count);
Component concat(const Component& left, const Component& right);

}  // namespace lights
