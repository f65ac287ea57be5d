// Shared shorthands for the test suites.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lights/component.hpp"
#include "lights/grundy.hpp"
#include "lights/sampling.hpp"

namespace lights_test {

inline lights::GrundyValue gv(std::uint64_t n) {
  return lights::GrundyValue::finite(n);
}

inline constexpr lights::GrundyValue kMoon = lights::GrundyValue::moon();

inline lights::Component comp(std::string_view text) {
  return lights::parse_component(text);
}

inline lights::Position pos(std::string_view text) {
  return lights::parse_position(text);
}

// k bulbs, then m sockets, then the tail.
inline lights::Component prefixed(std::size_t bulbs, std::size_t sockets,
                                  const lights::Component& tail) {
  using lights::Piece;
  return concat(concat(repeated(Piece::Bulb, bulbs), repeated(Piece::Socket, sockets)),
                tail);
}

// Every component of length min_len..max_len, shortest first, char form
// ascending within a length.
inline std::vector<lights::Component> all_components(std::size_t max_len,
                                                     std::size_t min_len = 0) {
  std::vector<lights::Component> out;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      out.push_back(lights::component_from_index(len, bits));
    }
  }
  return out;
}

}  // namespace lights_test
