#pragma once

#include <complex>
#include <map>

#include "permdyn/spin_config.hpp"

namespace permdyn {

using Complex = std::complex<double>;

/// A sparse complex amplitude map over spin configurations. Basis states of
/// the chain are the only configurations the dynamics ever needs; states with
/// more than one entry are formal superpositions.
class QuantumState {
 public:
  using AmplitudeMap = std::map<SpinConfig, Complex>;
  static constexpr double kPruneThreshold = 1e-14;

  explicit QuantumState(int spins);
  static QuantumState basis(const SpinConfig& state);

  int spins() const { return spins_; }
  std::size_t support_size() const { return amp_.size(); }
  const AmplitudeMap& amplitudes() const { return amp_; }

  /// Accumulates onto the existing amplitude (creating the entry if absent).
  void add(const SpinConfig& state, Complex amplitude);
  void set(const SpinConfig& state, Complex amplitude);
  /// Zero for configurations outside the support.
  Complex amplitude(const SpinConfig& state) const;

  double norm() const;
  QuantumState& normalize();
  /// Drops entries with magnitude below `threshold`.
  QuantumState& prune(double threshold = kPruneThreshold);

  double l2_distance(const QuantumState& other) const;

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  int spins_;
  AmplitudeMap amp_;
};

/// 1 minus the largest basis probability of a normalized state; zero exactly
/// when the state is a single basis configuration.
double superposition_weight(const QuantumState& psi);

}  // namespace permdyn
