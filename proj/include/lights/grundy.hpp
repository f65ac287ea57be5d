// Grundy values for this ruleset: a finite nimber index n (the value *n)
// or the moon, the absorbing value produced by carry-on threats.

#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace lights {

class GrundyValue {
 public:
  constexpr GrundyValue() = default;  // Finite 0

  static constexpr GrundyValue finite(std::uint64_t n) { return GrundyValue(n); }
  static constexpr GrundyValue moon() { return GrundyValue(kMoon); }

  constexpr bool is_moon() const { return raw_ == kMoon; }
  constexpr bool is_finite() const { return raw_ != kMoon; }

  constexpr std::uint64_t finite_value() const {
    assert(is_finite());
    return raw_;
  }

  // Finite values in order, moon greatest.
  friend constexpr auto operator<=>(GrundyValue, GrundyValue) = default;

  std::string to_string() const {
    return is_moon() ? "moon" : std::to_string(raw_);
  }

 private:
  static constexpr std::uint64_t kMoon = ~std::uint64_t{0};

  constexpr explicit GrundyValue(std::uint64_t raw) : raw_(raw) {}

  std::uint64_t raw_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const GrundyValue& v) {
  return os << v.to_string();
}

// P: previous player wins with perfect play; N: next player wins.
enum class Outcome { P, N };

inline const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

inline std::ostream& operator<<(std::ostream& os, Outcome o) {
  return os << to_string(o);
}

}  // namespace lights
