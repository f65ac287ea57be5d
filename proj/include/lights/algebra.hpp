// Disjunctive-sum arithmetic and outcome determination.

#pragma once

#include "lights/component.hpp"
#include "lights/grundy.hpp"

namespace lights {

// Nim-sum extended with an absorbing moon: Finite(x) + Finite(y) is the
// xor, anything with moon is moon. Associative and commutative, identity
// Finite(0).
constexpr GrundyValue gsum(GrundyValue a, GrundyValue b) {
  if (a.is_moon() || b.is_moon()) return GrundyValue::moon();
  return GrundyValue::finite(a.finite_value() ^ b.finite_value());
}

// gsum-fold of grundy_fast over the components; Finite(0) for the empty
// position.
GrundyValue position_value(const Position& p);

// P iff the position's value is Finite(0).
Outcome outcome(const Position& p);

}  // namespace lights
