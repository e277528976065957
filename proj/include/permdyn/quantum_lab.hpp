#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permdyn/operator_polynomial.hpp"
#include "permdyn/quantum_state.hpp"

namespace permdyn {

/// Leading-terms truncation of the reduced generator for long chains, with
/// the cot coefficients replaced by their large-S asymptote +-S/pi:
///   c_0 = pi/T, c_1 = -i/T, c_{S-1} = +i/T, all others zero.
/// Requires S >= 3 so the two tail terms are distinct. Inherits the reduced
/// form's behaviour on update-fixed states (eigenvalue pi/T, not zero).
OperatorPolynomial approx_hamiltonian(int S, double T);

/// (U - U^dagger) applied to a basis state: the raw two-term difference,
/// optionally normalized. Exactly zero when the state is update-fixed.
QuantumState commutator_action(const ChainModel& chain, const SpinConfig& state,
                               bool normalize = false);

/// Coefficient offsets for an operator polynomial. Either explicit `deltas`
/// (size S) or a seeded uniform draw from [-1,1)^2 per coefficient; with
/// `hermitize` the perturbed polynomial is re-symmetrized so evolution stays
/// unitary.
struct PerturbationSpec {
  double epsilon = 0.0;
  std::vector<Complex> deltas;
  std::optional<std::uint64_t> seed;
  bool hermitize = true;
};

/// Deterministic deltas for a spec (explicit ones, or the seeded draw).
std::vector<Complex> perturbation_deltas(const PerturbationSpec& spec, int S);

/// c_n + epsilon * delta_n, re-symmetrized when requested. At epsilon = 0 the
/// input is returned unchanged.
OperatorPolynomial perturb(const OperatorPolynomial& poly,
                           const PerturbationSpec& spec);

/// exp(-i H t) psi computed exactly orbit by orbit: the support is split into
/// orbits, rotated to Fourier modes, phased by the mode energies, and rotated
/// back. Norm is preserved for self-adjoint polynomials.
QuantumState evolve(const ChainModel& chain, const OperatorPolynomial& poly,
                    const QuantumState& psi, double t);
QuantumState evolve(const ChainModel& chain, const MagnetizedPolynomial& h,
                    const QuantumState& psi, double t);

/// Independent cross-check: evolution through a dense Hermitian
/// eigendecomposition of an explicit matrix. Rejects non-Hermitian input.
QuantumState evolve_dense(const ChainModel& chain, const ComplexMatrix& h,
                          const QuantumState& psi, double t,
                          int cap_spins = 10);

/// The update permutation applied to every basis state of a superposition.
QuantumState apply_update(const ChainModel& chain, const QuantumState& psi,
                          long n = 1, Direction dir = Direction::Forward);

/// Von Neumann entropy (nats) of the reduced state on positions 1..cut,
/// computed from the Gram matrix of the complementary-block components over
/// the sparse support. Zero for every basis state; at most ln of the smaller
/// block dimension.
double entanglement_entropy(const QuantumState& psi, int cut,
                            int cap_spins = 20);

/// All-up chain with a down pair at positions (4,5), so the first down spin
/// from the left sits on an even site. Requires 2S >= 8.
SpinConfig bell_probe_state(int spins);

}  // namespace permdyn
