#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permdyn/spin_config.hpp"

namespace permdyn {

enum class Direction { Forward, Inverse };

/// The position bijection realized by one update: the value at position p
/// moves to position forward[p-1]+1. Parity is preserved (odd positions map
/// to odd, even to even) and the S-th power is the identity.
struct PositionPermutation {
  std::vector<int> forward;  // 0-based source index -> 0-based target index
  std::vector<int> inverse;
};

/// One cycle of the update: the state returns to itself after exactly
/// `length` updates, and `length` divides S.
struct OrbitRecord {
  SpinConfig representative;
  long length = 0;
  std::optional<std::vector<SpinConfig>> states;
};

/// Values split by direction of motion: `right` holds the spins at even
/// positions 2,4,...,2S and `left` the spins at odd positions 1,3,...,2S-1,
/// each as +-1. `step` tags which update the view was taken at.
struct MoverView {
  std::vector<int> right;
  std::vector<int> left;
  long step = 0;
};

/// Rebuilds the configuration the view was taken from.
SpinConfig interleave(const MoverView& view);

/// Checks the transport relations between a view and the view one update
/// later: every right value copies from two sites below, every left value
/// from two sites above (cyclically). Exact; returns false on any mismatch.
/// Throws only if the two views disagree in size.
bool mover_check(const MoverView& a, const MoverView& b);

/// A ring of 2S spins advanced by one sweep of exchanges over the even pairs
/// (2,3),(4,5),...,(2S,1) followed by one sweep over the odd pairs
/// (1,2),(3,4),...,(2S-1,2S). Net effect per update: the value at an odd
/// position hops two sites down, the value at an even position two sites up.
class ChainModel {
 public:
  /// Requires S >= 2; for S = 1 the two sweeps cancel (degenerate chain).
  explicit ChainModel(int S);

  int S() const { return S_; }
  int spins() const { return 2 * S_; }
  const PositionPermutation& permutation() const { return perm_; }

  /// One update by literal sequential pair swaps (reference path; the
  /// permutation table is the fast path and is cross-checked against this).
  SpinConfig step_by_swaps(const SpinConfig& state) const;

  /// U^n (forward) or (U^dagger)^n (inverse) applied to a basis state in
  /// O(2S), independent of n, via cycle arithmetic on the position map.
  SpinConfig apply_update(const SpinConfig& state, long n = 1,
                          Direction dir = Direction::Forward) const;

  /// n-th power of the position map (0-based targets).
  std::vector<int> powered_map(long n,
                               Direction dir = Direction::Forward) const;

  /// The cycle of `state` under the update, with its exact minimal length.
  OrbitRecord orbit_of(const SpinConfig& state, bool with_states = false) const;

  /// Every orbit of the 2^{2S} configurations, sorted by representative
  /// (the lexicographically smallest member). Requires 2S <= cap_spins.
  std::vector<OrbitRecord> enumerate_orbits(int cap_spins = 24) const;

  MoverView mover_decompose(const SpinConfig& state, long step = 0) const;

 private:
  void check_state(const SpinConfig& state) const;

  int S_;
  PositionPermutation perm_;
};

}  // namespace permdyn
