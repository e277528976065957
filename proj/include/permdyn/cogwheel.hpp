#pragma once

#include <vector>

#include "permdyn/complex_matrix.hpp"

namespace permdyn {

/// A single degree of freedom hopping deterministically through N states,
/// one hop per time step T, with an optional unit phase per hop.
struct CogwheelSystem {
  int N = 1;
  double T = 1.0;
  std::vector<double> phases;  // size N; empty means all zero

  static CogwheelSystem plain(int N, double T = 1.0);
  double phase(int k) const;  // phi_k, k = 1..N
  double phase_sum() const;
  void validate() const;
};

/// The N x N one-hop unitary in standard form: entry (k, k+1) holds
/// e^{i phi_k} for k = 1..N-1 and entry (N, 1) holds e^{i phi_N}; every
/// other entry vanishes. Its N-th power is e^{i sum phi} times the identity.
ComplexMatrix standard_permutation_matrix(const CogwheelSystem& sys);

/// Hamiltonian eigenvalues (2 pi (n-1) - sum phi) / (N T), ascending in
/// n = 1..N.
std::vector<double> cogwheel_spectrum(const CogwheelSystem& sys);

/// Eigenvector phase a_{nm} = (2 pi / N)(nm - n - m + 1) mod 2 pi,
/// normalized to [0, 2 pi). Symmetric in (n, m) with a_{n1} = 0.
double eigenvector_phase(int N, int n, int m);

/// The unitary with entries e^{i a_{nm}} / sqrt(N). It is symmetric and maps
/// the hop basis onto the Hamiltonian eigenbasis.
ComplexMatrix diagonalizer(int N);

/// Closed-form Hamiltonian of the zero-phase cogwheel: diagonal entries
/// pi (N-1) / (N T), off-diagonal entries (pi/(N T))(-1 + i cot(pi (n-m)/N)).
/// Self-adjoint by construction; entries depend only on (n-m) mod N.
ComplexMatrix cogwheel_hamiltonian(int N, double T);

/// exp(-i H T) assembled analytically through the diagonalizer (no numerical
/// eigensolver); reproduces the zero-phase standard-form matrix.
ComplexMatrix cogwheel_exponential(int N, double T);

}  // namespace permdyn
