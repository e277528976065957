#pragma once

#include <vector>

#include "permdyn/chain.hpp"
#include "permdyn/complex_matrix.hpp"
#include "permdyn/quantum_state.hpp"

namespace permdyn {

/// A chain operator H = sum_{n=0}^{S-1} c_n U^n with U the update operator.
/// Self-adjoint representations have c_0 real and c_{S-n} = conj(c_n),
/// using U^{S-k} = (U^dagger)^k.
struct OperatorPolynomial {
  int S = 0;
  double T = 1.0;
  std::vector<Complex> c;

  bool is_hermitian(double tol = 1e-12) const;
  /// Symmetrized copy: c_0 real, conjugate-paired tails.
  OperatorPolynomial hermitized() const;
};

/// The exact generator: exp(-i H T) advances every configuration by exactly
/// one update, zero modes included. Coefficients are the inverse Fourier
/// transform of the per-orbit energies:
///   c_0 = pi (S-1) / (S T),   c_n = (pi / (S T)) (-1 - i cot(pi n / S)).
OperatorPolynomial synthesize_exact(int S, double T);

/// The short form without the update-invariant projector:
///   c_0 = pi / T,             c_n = -(i pi / (S T)) cot(pi n / S).
/// Agrees with the exact generator on every component orthogonal to the
/// update-symmetric modes, where the two differ by exactly pi / T.
OperatorPolynomial synthesize_reduced(int S, double T);

/// Product modulo U^S = 1 (cyclic convolution of coefficients).
OperatorPolynomial multiply(const OperatorPolynomial& a,
                            const OperatorPolynomial& b);

/// sum_n c_n U^n psi, computed by repeated permutation application; the
/// result never has more than S * support(psi) entries and is pruned.
QuantumState apply_hamiltonian(const ChainModel& chain,
                               const OperatorPolynomial& poly,
                               const QuantumState& psi);

/// Eigenvalues on the L Fourier modes of one orbit. Mode r carries update
/// eigenvalue w_r = exp(-2 pi i r / L) and energy sum_n c_n w_r^n; for the
/// exact generator these are real and lie on the grid {2 pi j / (S T)}.
std::vector<Complex> orbit_spectrum(const OperatorPolynomial& poly,
                                    const OrbitRecord& orbit);

/// The 0/1 permutation matrix of one update on the full 2^{2S} space.
ComplexMatrix dense_update_matrix(const ChainModel& chain, int cap_spins = 14);

/// sum_n c_n U^n as an explicit 2^{2S} matrix (cross-check path only).
ComplexMatrix dense_hamiltonian(const ChainModel& chain,
                                const OperatorPolynomial& poly,
                                int cap_spins = 14);

/// H + mu M with M the magnetization operator. M is diagonal in the spin
/// basis and constant along every orbit, so it commutes with each power of U
/// and per-orbit evolution still applies; the one-step identity becomes
/// exp(-i (H + mu M) T) = U exp(-i mu M T).
struct MagnetizedPolynomial {
  OperatorPolynomial poly;
  double mu = 0.0;
};

MagnetizedPolynomial add_magnetization_term(OperatorPolynomial poly, double mu);

QuantumState apply_hamiltonian(const ChainModel& chain,
                               const MagnetizedPolynomial& h,
                               const QuantumState& psi);

ComplexMatrix dense_hamiltonian(const ChainModel& chain,
                                const MagnetizedPolynomial& h,
                                int cap_spins = 14);

}  // namespace permdyn
