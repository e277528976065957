#include "permdyn/quantum_state.hpp"

#include <cmath>
#include <stdexcept>

namespace permdyn {

QuantumState::QuantumState(int spins) : spins_(spins) {
  if (spins < 4 || spins % 2 != 0) {
    throw std::invalid_argument("quantum state needs an even number of spins >= 4");
  }
}

QuantumState QuantumState::basis(const SpinConfig& state) {
  QuantumState psi(state.spins());
  psi.amp_.emplace(state, Complex(1.0, 0.0));
  return psi;
}

void QuantumState::add(const SpinConfig& state, Complex amplitude) {
  if (state.spins() != spins_) {
    throw std::invalid_argument("configuration size does not match the state");
  }
  amp_[state] += amplitude;
}

void QuantumState::set(const SpinConfig& state, Complex amplitude) {
  if (state.spins() != spins_) {
    throw std::invalid_argument("configuration size does not match the state");
  }
  amp_[state] = amplitude;
}

Complex QuantumState::amplitude(const SpinConfig& state) const {
  const auto it = amp_.find(state);
  return it == amp_.end() ? Complex(0.0, 0.0) : it->second;
}

double QuantumState::norm() const {
  double sum = 0.0;
  for (const auto& [state, a] : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

QuantumState& QuantumState::normalize() {
  const double n = norm();
  if (n == 0.0) {
    throw std::domain_error("cannot normalize the zero state");
  }
  for (auto& [state, a] : amp_) a /= n;
  return *this;
}

QuantumState& QuantumState::prune(double threshold) {
  for (auto it = amp_.begin(); it != amp_.end();) {
    if (std::abs(it->second) < threshold) {
      it = amp_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

double QuantumState::l2_distance(const QuantumState& other) const {
  double sum = 0.0;
  auto a = amp_.begin();
  auto b = other.amp_.begin();
  while (a != amp_.end() || b != other.amp_.end()) {
    if (b == other.amp_.end() || (a != amp_.end() && a->first < b->first)) {
      sum += std::norm(a->second);
      ++a;
    } else if (a == amp_.end() || b->first < a->first) {
      sum += std::norm(b->second);
      ++b;
    } else {
      sum += std::norm(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return std::sqrt(sum);
}

double superposition_weight(const QuantumState& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-6) {
    throw std::invalid_argument("superposition weight needs a normalized state");
  }
  double max_prob = 0.0;
  for (const auto& [state, a] : psi.amplitudes()) {
    max_prob = std::max(max_prob, std::norm(a));
  }
  return std::max(0.0, 1.0 - max_prob);
}

}  // namespace permdyn
