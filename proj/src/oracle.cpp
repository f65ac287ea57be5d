#include "lights/oracle.hpp"

#include <algorithm>

#include "lights/algebra.hpp"
#include "lights/moves.hpp"
#include "lights/sampling.hpp"
#include "lights/solver.hpp"

namespace lights {

std::uint64_t mex(const std::vector<std::uint64_t>& values) {
  std::vector<std::uint64_t> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t least = 0;
  for (std::uint64_t v : sorted) {
    if (v == least) ++least;
    if (v > least) break;
  }
  return least;
}

GrundyValue eval_sets_value(const EvalSets& sets) {
  if (!sets.carry_targets.empty()) {
    const GrundyValue first = sets.carry_targets.front();
    for (GrundyValue target : sets.carry_targets) {
      if (target.is_moon() || target != first) return GrundyValue::moon();
    }
    // Every nimber except *n is protected; n itself must not be reachable
    // quietly or the whole nimber class is covered.
    const std::uint64_t n = first.finite_value();
    const bool n_immediate = std::find(sets.immediate.begin(),
                                       sets.immediate.end(),
                                       n) != sets.immediate.end();
    return n_immediate ? GrundyValue::moon() : GrundyValue::finite(n);
  }
  return GrundyValue::finite(mex(sets.immediate));
}

std::optional<GrundyValue> TranspositionTable::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void TranspositionTable::store(const std::string& key, GrundyValue value) {
  std::lock_guard<std::mutex> lock(mutex_);
  map_.emplace(key, value);
}

std::size_t TranspositionTable::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return map_.size();
}

namespace {

GrundyValue eval_component(const Component& c, TranspositionTable* memo);

EvalSets collect_sets(const Component& c, TranspositionTable* memo) {
  EvalSets sets;
  for (const Move& move : legal_moves(c)) {
    const GrundyValue child = eval_component(apply(c, move), memo);
    if (move.kind == MoveKind::RemoveSocketShock) {
      sets.carry_targets.push_back(child);
    } else if (child.is_finite()) {
      sets.immediate.push_back(child.finite_value());
    }
    // Quiet options with moon value are not nimbers: dropped.
  }
  return sets;
}

GrundyValue eval_component(const Component& c, TranspositionTable* memo) {
  if (c.empty()) return GrundyValue::finite(0);
  const std::string key = c.to_string();
  if (memo) {
    if (const auto hit = memo->lookup(key)) return *hit;
  }
  const GrundyValue value = eval_sets_value(collect_sets(c, memo));
  if (memo) memo->store(key, value);
  return value;
}

}  // namespace

EvalSets eval_sets(const Component& c, TranspositionTable& memo) {
  return collect_sets(c, &memo);
}

GrundyValue grundy_oracle(const Component& c, TranspositionTable& memo) {
  return eval_component(c, &memo);
}

GrundyValue grundy_oracle_uncached(const Component& c) {
  return eval_component(c, nullptr);
}

std::optional<bool> PlayoutTable::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void PlayoutTable::store(const std::string& key, bool mover_wins) {
  std::lock_guard<std::mutex> lock(mutex_);
  map_.emplace(key, mover_wins);
}

std::size_t PlayoutTable::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return map_.size();
}

namespace {

std::string playout_key(const Position& p) {
  std::vector<std::string> parts;
  parts.reserve(p.components.size());
  for (const Component& c : p.components) {
    if (!c.empty()) parts.push_back(c.to_string());
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& part : parts) {
    key += part;
    key += '+';
  }
  return key;
}

bool mover_wins(const Position& p, PlayoutTable& memo) {
  const std::vector<Move> moves = legal_moves(p);
  if (moves.empty()) return false;
  const std::string key = playout_key(p);
  if (const auto hit = memo.lookup(key)) return *hit;
  bool wins = false;
  for (const Move& move : moves) {
    const Position next = apply(p, move);
    if (move.kind == MoveKind::RemoveSocketShock) {
      // Carry-on: the same player moves again.
      if (mover_wins(next, memo)) { wins = true; break; }
    } else {
      if (!mover_wins(next, memo)) { wins = true; break; }
    }
  }
  memo.store(key, wins);
  return wins;
}

}  // namespace

Outcome outcome_playout(const Position& p, PlayoutTable& memo) {
  return mover_wins(p, memo) ? Outcome::N : Outcome::P;
}

VerifyReport verify_range(int max_len) {
  VerifyReport report;
  report.max_len = max_len;
  TranspositionTable memo;
  for (int len = 0; len <= max_len; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const Component c = component_from_index(static_cast<std::size_t>(len), bits);
      const GrundyValue fast = grundy_fast(c);
      const GrundyValue slow = grundy_oracle(c, memo);
      ++report.checked;
      ++report.histogram[slow];
      if (fast != slow) {
        report.mismatches.push_back({c.to_string(), fast, slow});
      }
    }
  }
  return report;
}

PlayoutCheck playout_consistency(int max_pieces, int max_components,
                                 std::size_t samples, std::uint64_t seed) {
  PlayoutCheck check;
  check.max_pieces = max_pieces;
  check.max_components = max_components;
  check.samples = samples;
  check.seed = seed;
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  PlayoutTable playout_memo;
  TranspositionTable value_memo;
  for (std::size_t i = 0; i < samples; ++i) {
    const Position pos = random_position(rng, static_cast<std::size_t>(max_components),
                                         static_cast<std::size_t>(max_pieces));
    const Outcome played = outcome_playout(pos, playout_memo);
    GrundyValue oracle_sum = GrundyValue::finite(0);
    for (const Component& c : pos.components) {
      oracle_sum = gsum(oracle_sum, grundy_oracle(c, value_memo));
    }
    const Outcome ruled =
        oracle_sum == GrundyValue::finite(0) ? Outcome::P : Outcome::N;
    if (played == ruled && played == outcome(pos)) ++check.agreements;
  }
  return check;
}

}  // namespace lights
