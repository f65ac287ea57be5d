// Closed-form evaluation, linear in the number of runs. A component is
// folded right to left: each step consumes a socket run together with the
// bulb run on its left (if any) and maps the value of the processed suffix
// through triple_value. The fold is sound because the value of
// <k bulbs><m sockets><suffix> depends only on the suffix's value, never on
// its shape, and moon is absorbing under such prefixes.

#pragma once

#include <cstdint>
#include <vector>

#include "lights/component.hpp"
#include "lights/grundy.hpp"

namespace lights {

// Value of <bulbs x k><sockets x m><X> where X is empty or starts with a
// bulb and has value `suffix`. Cases:
//   suffix moon          -> moon
//   m == 0               -> k + n            (splice: one bulb string)
//   k == 0               -> n if m even, n -/+ 1 (by parity of n) if m odd
//   k > 0, n == 0        -> k if m even, k + 1 if m odd
//   k > 0, n == 1        -> moon if m == 1; k if m odd; k + 1 if m even
//   k > 0, n >= 2        -> k + n if m odd; k + n +/- 1 (by parity) if even
GrundyValue triple_value(std::uint64_t bulbs, std::uint64_t sockets,
                         GrundyValue suffix);

GrundyValue grundy_fast(const Component& c);

// The suffix values after each fold, left to right in fold order;
// back() == grundy_fast(c). Empty for the empty component. The scan stops
// at the first moon (later folds cannot change it).
std::vector<GrundyValue> grundy_fast_trace(const Component& c);

}  // namespace lights
