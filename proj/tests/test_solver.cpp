#include <map>
#include <vector>

#include "doctest.h"
#include "lights/oracle.hpp"
#include "lights/solver.hpp"
#include "test_util.hpp"

using namespace lights;
using lights_test::all_components;
using lights_test::comp;
using lights_test::gv;
using lights_test::kMoon;
using lights_test::prefixed;

TEST_CASE("triple_value cases") {
  CHECK(triple_value(1, 1, gv(1)) == kMoon);
  CHECK(triple_value(2, 4, gv(1)) == gv(3));
  CHECK(triple_value(2, 3, gv(1)) == gv(2));
  CHECK(triple_value(2, 1, gv(4)) == gv(6));
  CHECK(triple_value(2, 2, gv(5)) == gv(6));
  CHECK(triple_value(2, 3, gv(5)) == gv(7));

  // The folds of the 19-piece showcase component.
  CHECK(triple_value(4, 2, gv(2)) == gv(7));
  CHECK(triple_value(5, 1, gv(7)) == gv(12));
  CHECK(triple_value(2, 3, gv(12)) == gv(14));

  // Leading socket runs.
  CHECK(triple_value(0, 1, gv(2)) == gv(3));
  CHECK(triple_value(0, 2, gv(1)) == gv(1));

  // Bulb strings splice.
  for (std::uint64_t k = 0; k <= 8; ++k) {
    CHECK(triple_value(k, 0, gv(0)) == gv(k));
  }
  CHECK(triple_value(2, 0, gv(3)) == gv(5));

  // Moon absorbs for every prefix, including the degenerate ones.
  for (std::uint64_t k = 0; k <= 3; ++k) {
    for (std::uint64_t m = 0; m <= 3; ++m) {
      CHECK(triple_value(k, m, kMoon) == kMoon);
    }
  }
}

TEST_CASE("fast values of the walkthrough components") {
  CHECK(grundy_fast(Component{}) == gv(0));
  CHECK(grundy_fast(comp("b")) == gv(1));
  CHECK(grundy_fast(comp("s")) == gv(1));
  CHECK(grundy_fast(comp("sbs")) == gv(3));
  CHECK(grundy_fast(comp("sssbb")) == gv(3));
  CHECK(grundy_fast(comp("bbsssbbbbbsbbbbssbb")) == gv(14));
  CHECK(grundy_fast(comp("bbsbbbsbsssb")) == kMoon);
}

TEST_CASE("fold traces") {
  CHECK(grundy_fast_trace(Component{}).empty());
  CHECK(grundy_fast_trace(comp("b2s3b5s1b4s2b2")) ==
        std::vector<GrundyValue>{gv(2), gv(7), gv(12), gv(14)});
  // The moon short-circuits the scan.
  CHECK(grundy_fast_trace(comp("b2s1b3s1b1s3b1")) ==
        std::vector<GrundyValue>{gv(1), gv(1), kMoon});
  for (const Component& c : all_components(10)) {
    const std::vector<GrundyValue> trace = grundy_fast_trace(c);
    if (c.empty()) {
      CHECK(trace.empty());
    } else {
      CHECK(trace.back() == grundy_fast(c));
    }
  }
}

namespace {

// The closed formulas, restated literally by case as a transcription guard.
GrundyValue closed_formula(std::uint64_t k, std::uint64_t m, std::uint64_t n) {
  REQUIRE(m > 0);
  if (k == 0) {
    if (m % 2 == 0) return gv(n);
    return n % 2 == 0 ? gv(n + 1) : gv(n - 1);
  }
  if (n == 0) return m % 2 == 0 ? gv(k) : gv(k + 1);
  if (n == 1) {
    if (m == 1) return kMoon;
    return m % 2 == 1 ? gv(k) : gv(k + 1);
  }
  if (m % 2 == 1) return gv(k + n);
  return n % 2 == 0 ? gv(k + n + 1) : gv(k + n - 1);
}

}  // namespace

TEST_CASE("closed-formula grid: solver matches the literal cases") {
  for (std::uint64_t k = 0; k <= 6; ++k) {
    for (std::uint64_t m = 1; m <= 6; ++m) {
      for (std::uint64_t n = 0; n <= 6; ++n) {
        const Component c = prefixed(k, m, repeated(Piece::Bulb, n));
        CHECK_MESSAGE(grundy_fast(c) == closed_formula(k, m, n),
                      "k=", k, " m=", m, " n=", n);
        CHECK(triple_value(k, m, gv(n)) == closed_formula(k, m, n));
      }
    }
  }
}

TEST_CASE("fast solver equals the oracle up to length 12") {
  TranspositionTable memo;
  for (const Component& c : all_components(12)) {
    CHECK_MESSAGE(grundy_fast(c) == grundy_oracle(c, memo), c.to_string());
  }
}

TEST_CASE("moon suffixes are absorbing under any prefix") {
  TranspositionTable memo;
  for (const Component& c : all_components(8)) {
    if (!grundy_oracle(c, memo).is_moon()) continue;
    for (std::size_t k = 0; k <= 3; ++k) {
      for (std::size_t m = 0; m <= 3; ++m) {
        CHECK(grundy_fast(prefixed(k, m, c)) == kMoon);
      }
    }
  }
}

TEST_CASE("prefix values depend only on the suffix value") {
  TranspositionTable memo;
  // Bulb-leading components up to length 6, grouped by finite value.
  std::map<GrundyValue, std::vector<Component>> classes;
  for (const Component& c : all_components(6, 1)) {
    if (c[0] != Piece::Bulb) continue;
    const GrundyValue value = grundy_oracle(c, memo);
    if (value.is_finite()) classes[value].push_back(c);
  }
  REQUIRE(classes.size() >= 3);
  for (const auto& [value, members] : classes) {
    for (std::size_t k = 0; k <= 3; ++k) {
      for (std::size_t m = 0; m <= 3; ++m) {
        const GrundyValue first = grundy_oracle(prefixed(k, m, members[0]), memo);
        for (const Component& other : members) {
          CHECK(grundy_oracle(prefixed(k, m, other), memo) == first);
        }
      }
    }
  }
}
