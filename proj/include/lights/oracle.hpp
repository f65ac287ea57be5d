// Ground-truth evaluation. grundy_oracle applies the mex rule for games
// with carry-on moves recursively to a component's option tree;
// outcome_playout decides
// win/loss by direct play-out search with no value theory at all. The two
// are independent of the closed-form solver and of each other, which is
// what makes verify_range and playout_consistency meaningful checks.

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lights/component.hpp"
#include "lights/grundy.hpp"

namespace lights {

// Least nonnegative integer not in values.
std::uint64_t mex(const std::vector<std::uint64_t>& values);

// Option values of a component, split by move type. `immediate` holds the
// finite values of quiet options (moon-valued quiet options are not nimbers
// and are dropped); `carry_targets` holds the landing values of shock moves.
struct EvalSets {
  std::vector<std::uint64_t> immediate;
  std::vector<GrundyValue> carry_targets;
};

// The mex rule specialized to this ruleset, where every non-quiet option is
// a carry-on. A carry-on landing on *n protects every nimber except *n, so:
//  - any moon carry target, or two distinct finite ones  -> moon;
//  - a single shared finite target n                     -> moon if n is
//    also an immediate value, else Finite(n);
//  - no carry targets                                    -> mex(immediate).
GrundyValue eval_sets_value(const EvalSets& sets);

// Memo from exact piece sequence (char form) to value. Entries never change
// once written; safe for concurrent use from several threads.
class TranspositionTable {
 public:
  std::optional<GrundyValue> lookup(const std::string& key) const;
  void store(const std::string& key, GrundyValue value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, GrundyValue> map_;
};

EvalSets eval_sets(const Component& c, TranspositionTable& memo);

GrundyValue grundy_oracle(const Component& c, TranspositionTable& memo);
GrundyValue grundy_oracle_uncached(const Component& c);

// Memo for the play-out search, keyed on the multiset of non-empty
// component strings (turn state is implicit: the shock branch recurses for
// the same player). Same write-once, thread-safe contract as above.
class PlayoutTable {
 public:
  std::optional<bool> lookup(const std::string& key) const;
  void store(const std::string& key, bool mover_wins);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, bool> map_;
};

// Direct win/loss search on the actual play semantics: the player to move
// wins iff some quiet/fix move leads to a position the opponent loses, or
// some shock move leads to a position the same player (moving again) wins.
// No moves means the mover loses.
Outcome outcome_playout(const Position& p, PlayoutTable& memo);

struct VerifyMismatch {
  std::string component;
  GrundyValue fast;
  GrundyValue oracle;
};

struct VerifyReport {
  int max_len = 0;
  std::uint64_t checked = 0;
  std::vector<VerifyMismatch> mismatches;
  std::map<GrundyValue, std::uint64_t> histogram;  // oracle values

  bool ok() const { return mismatches.empty(); }
};

// Enumerates every component of length 0..max_len (2^(max_len+1) - 1 of
// them) and checks grundy_fast against grundy_oracle on each.
VerifyReport verify_range(int max_len);

struct PlayoutCheck {
  int max_pieces = 0;
  int max_components = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t agreements = 0;

  bool ok() const { return agreements == samples; }
};

// Draws seeded random positions and checks outcome_playout against the
// nim-sum outcome rule (P iff the component values xor to 0), with the
// component values taken from both the oracle and the fast solver.
PlayoutCheck playout_consistency(int max_pieces, int max_components,
                                 std::size_t samples, std::uint64_t seed);

}  // namespace lights
