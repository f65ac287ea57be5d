// Deterministic component enumeration and seeded random sampling, shared by
// the verifier, the tests, and the CLI. Randomness uses raw mt19937 output
// so sequences are identical across standard libraries.

#pragma once

#include <cstdint>
#include <random>

#include "lights/component.hpp"

namespace lights {

// The `bits`-th component of the given length, counting lexicographically
// in char form: the leftmost piece is the most significant bit, Bulb = 0,
// Socket = 1. Pre: length < 64, bits < 2^length.
Component component_from_index(std::size_t length, std::uint64_t bits);

Component random_component(std::mt19937& rng, std::size_t length);

// 1..max_components components whose lengths sum to at most max_total_pieces.
Position random_position(std::mt19937& rng, std::size_t max_components,
                         std::size_t max_total_pieces);

}  // namespace lights
