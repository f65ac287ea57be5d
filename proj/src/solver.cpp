#include "lights/solver.hpp"

#include <cassert>

namespace lights {

GrundyValue triple_value(std::uint64_t bulbs, std::uint64_t sockets,
                         GrundyValue suffix) {
  if (suffix.is_moon()) return GrundyValue::moon();
  const std::uint64_t k = bulbs;
  const std::uint64_t m = sockets;
  const std::uint64_t n = suffix.finite_value();

  if (m == 0) {
    // No sockets between: the whole thing plays as one bulb string.
    return GrundyValue::finite(k + n);
  }
  if (k == 0) {
    // Sockets then suffix. Odd socket counts perturb n by its parity.
    if (m % 2 == 0) return GrundyValue::finite(n);
    return GrundyValue::finite(n % 2 == 0 ? n + 1 : n - 1);
  }
  if (n == 0) {
    // Bulbs then sockets.
    return GrundyValue::finite(m % 2 == 0 ? k : k + 1);
  }
  if (n == 1) {
    // m == 1: the carry-on lands on *(k+1) while the quiet option to
    // k bulbs + 1 socket is also *(k+1); every nimber is covered.
    if (m == 1) return GrundyValue::moon();
    return GrundyValue::finite(m % 2 == 1 ? k : k + 1);
  }
  // n >= 2.
  if (m % 2 == 1) return GrundyValue::finite(k + n);
  return GrundyValue::finite(n % 2 == 0 ? k + n + 1 : k + n - 1);
}

namespace {

// One backward pass over the pieces, no run list materialized: count the
// trailing bulb run, then alternately a socket run and the bulb run on its
// left, folding each pair through triple_value.
template <typename OnFold>
GrundyValue fold_backward(const Component& c, OnFold&& on_fold) {
  const std::vector<Piece>& pieces = c.pieces();
  std::size_t i = pieces.size();
  GrundyValue value = GrundyValue::finite(0);
  if (i > 0 && pieces[i - 1] == Piece::Bulb) {
    const std::size_t end = i;
    while (i > 0 && pieces[i - 1] == Piece::Bulb) --i;
    value = triple_value(end - i, 0, value);
    on_fold(value);
  }
  while (i > 0) {
    std::size_t end = i;
    while (i > 0 && pieces[i - 1] == Piece::Socket) --i;
    const std::uint64_t sockets = end - i;
    assert(sockets > 0);
    end = i;
    while (i > 0 && pieces[i - 1] == Piece::Bulb) --i;
    const std::uint64_t bulbs = end - i;  // 0 at a socket-leading start
    value = triple_value(bulbs, sockets, value);
    on_fold(value);
    if (value.is_moon()) break;  // absorbing under any further prefix
  }
  return value;
}

}  // namespace

GrundyValue grundy_fast(const Component& c) {
  return fold_backward(c, [](GrundyValue) {});
}

std::vector<GrundyValue> grundy_fast_trace(const Component& c) {
  std::vector<GrundyValue> trace;
  fold_backward(c, [&trace](GrundyValue v) { trace.push_back(v); });
  return trace;
}

}  // namespace lights
