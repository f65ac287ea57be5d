#include "lights/algebra.hpp"

#include "lights/solver.hpp"

namespace lights {

GrundyValue position_value(const Position& p) {
  GrundyValue sum = GrundyValue::finite(0);
  for (const Component& c : p.components) {
    sum = gsum(sum, grundy_fast(c));
    if (sum.is_moon()) break;
  }
  return sum;
}

Outcome outcome(const Position& p) {
  return position_value(p) == GrundyValue::finite(0) ? Outcome::P : Outcome::N;
}

}  // namespace lights
