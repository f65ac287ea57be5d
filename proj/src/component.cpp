#include "lights/component.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace lights {

namespace {

// Guards against pathological run counts blowing up memory.
constexpr std::uint64_t kMaxPieces = 100'000'000;

std::pair<std::string_view, std::size_t> trimmed(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return {text.substr(begin, end - begin), begin};
}

Piece piece_of(char ch, std::size_t offset) {
  if (ch == 'b') return Piece::Bulb;
  if (ch == 's') return Piece::Socket;
  throw ParseError(std::string("unexpected character '") + ch + "'", offset);
}

Component parse_char_form(std::string_view text) {
  std::vector<Piece> pieces;
  pieces.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    pieces.push_back(piece_of(text[i], i));
  }
  return Component(std::move(pieces));
}

Component parse_run_form(std::string_view text) {
  std::vector<Piece> pieces;
  std::size_t i = 0;
  while (i < text.size()) {
    const Piece kind = piece_of(text[i], i);
    ++i;
    std::uint64_t count = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, count);
    if (ptr == first) throw ParseError("run length expected", i);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError("run length out of range", i);
    }
    if (count == 0) throw ParseError("run length must be at least 1", i);
    if (pieces.size() + count > kMaxPieces) {
      throw ParseError("component too long", i);
    }
    i = static_cast<std::size_t>(ptr - text.data());
    pieces.insert(pieces.end(), count, kind);
  }
  return Component(std::move(pieces));
}

}  // namespace

std::vector<Run> Component::runs() const {
  std::vector<Run> out;
  for (Piece p : pieces_) {
    if (!out.empty() && out.back().kind == p) {
      ++out.back().length;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::string Component::to_string() const {
  std::string out;
  out.reserve(pieces_.size());
  for (Piece p : pieces_) out.push_back(static_cast<char>(p));
  return out;
}

std::string Component::run_form() const {
  std::string out;
  for (const Run& run : runs()) {
    out.push_back(static_cast<char>(run.kind));
    out += std::to_string(run.length);
  }
  return out;
}

std::size_t Position::total_pieces() const {
  std::size_t total = 0;
  for (const Component& c : components) total += c.size();
  return total;
}

std::string Position::to_string() const {
  if (components.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) out += " + ";
    out += components[i].to_string();
  }
  return out;
}

Component parse_component(std::string_view text) {
  if (text.find_first_of("0123456789") == std::string_view::npos) {
    return parse_char_form(text);
  }
  return parse_run_form(text);
}

std::vector<Fragment> position_fragments(std::string_view text) {
  const auto [whole, whole_offset] = trimmed(text);
  if (whole == "0") return {};
  std::vector<Fragment> fragments;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = whole.find('+', start);
    const std::string_view raw =
        whole.substr(start, plus == std::string_view::npos ? std::string_view::npos
                                                           : plus - start);
    const auto [frag, frag_offset] = trimmed(raw);
    fragments.push_back({std::string(frag), whole_offset + start + frag_offset});
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return fragments;
}

Position parse_position(std::string_view text) {
  Position position;
  const std::vector<Fragment> fragments = position_fragments(text);
  position.components.reserve(fragments.size());
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    try {
      position.components.push_back(parse_component(fragments[i].text));
    } catch (const ParseError& e) {
      throw ParseError("component " + std::to_string(i) + ": " + e.what(),
                       fragments[i].offset + e.offset());
    }
  }
  return position;
}

Component repeated(Piece kind, std::size_t count) {
  return Component(std::vector<Piece>(count, kind));
}

Component concat(const Component& left, const Component& right) {
  std::vector<Piece> pieces = left.pieces();
  pieces.insert(pieces.end(), right.pieces().begin(), right.pieces().end());
  return Component(std::move(pieces));
}

}  // namespace lights
