#include "lights/sampling.hpp"

#include <cassert>

namespace lights {

Component component_from_index(std::size_t length, std::uint64_t bits) {
  assert(length < 64);
  std::vector<Piece> pieces(length);
  for (std::size_t i = 0; i < length; ++i) {
    const bool socket = (bits >> (length - 1 - i)) & 1;
    pieces[i] = socket ? Piece::Socket : Piece::Bulb;
  }
  return Component(std::move(pieces));
}

Component random_component(std::mt19937& rng, std::size_t length) {
  std::vector<Piece> pieces(length);
  for (std::size_t i = 0; i < length; ++i) {
    pieces[i] = rng() % 2 ? Piece::Socket : Piece::Bulb;
  }
  return Component(std::move(pieces));
}

Position random_position(std::mt19937& rng, std::size_t max_components,
                         std::size_t max_total_pieces) {
  Position p;
  const std::size_t count = 1 + rng() % max_components;
  std::size_t budget = max_total_pieces;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t length = rng() % (budget + 1);
    p.components.push_back(random_component(rng, length));
    budget -= length;
  }
  return p;
}

}  // namespace lights
