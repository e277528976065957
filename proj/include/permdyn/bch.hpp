#pragma once

#include <utility>
#include <vector>

#include "permdyn/chain.hpp"
#include "permdyn/complex_matrix.hpp"
#include "permdyn/operator_polynomial.hpp"

namespace permdyn::bch {

/// One sweep of the update: disjoint position pairs whose exchange operators
/// all commute with one another. Pairs are normalized to i < j.
struct TranspositionSet {
  enum class Parity { EvenSweep, OddSweep };
  std::vector<std::pair<int, int>> pairs;
  Parity parity = Parity::EvenSweep;
};

/// Pairs (2,3),(4,5),...,(2S,1) — the sweep the update applies first.
TranspositionSet even_sweep(int spins);
/// Pairs (1,2),(3,4),...,(2S-1,2S) — the sweep the update applies second.
TranspositionSet odd_sweep(int spins);

/// Dense exchange operator of sites i and j on 2^{spins} states, built from
/// the two-site Pauli product (sigma_i . sigma_j + 1)/2. Squares to the
/// identity and swaps the two sites' values on every basis state.
ComplexMatrix transposition_matrix(int i, int j, int spins, int cap_spins = 14);

/// Sum of the sweep's exchange operators.
ComplexMatrix sweep_sum(const TranspositionSet& sweep, int spins,
                        int cap_spins = 14);

/// Max-abs residual of P - i exp(-i (2k + 1/2) pi P), the exponential taken
/// in closed form from P^2 = 1. Near machine zero for every integer k.
double transposition_exponential_residual(int i, int j, int spins, int k,
                                          int cap_spins = 14);

enum class SweepOrdering {
  OddPairsLeft,   // matches the update: even sweep acts first
  EvenPairsLeft,  // swapped factors; lands on the inverse update instead
};

/// Max-abs residual of
///   i^{2S} exp(-i pi/2 sum P_first) exp(-i pi/2 sum P_second) - U
/// against the dense update permutation. The sweep exponentials are computed
/// by scaling-and-squaring, independently of the commuting-factor split that
/// explains the identity.
double product_identity_residual(const ChainModel& chain, SweepOrdering ordering,
                                 int cap_spins = 12);

/// Max-abs entry residual of exp(-i H T) - U over the full 2^{2S} matrix,
/// the exponential assembled column by column through orbit Fourier modes.
double terminating_exp_residual_dense(const ChainModel& chain,
                                      const OperatorPolynomial& poly,
                                      int cap_spins = 14);

/// Max over probe basis states of | exp(-i H T) b - U b |, each column
/// computed per orbit; no dimension cap.
double terminating_exp_residual_orbit(const ChainModel& chain,
                                      const OperatorPolynomial& poly,
                                      const std::vector<SpinConfig>& probes);

/// Truncated commutator series for log(exp(X) exp(Y)):
///   Z = X + Y + [X,Y]/2 + ([X,[X,Y]] + [Y,[Y,X]])/12 - [Y,[X,[X,Y]]]/24,
/// cut after the terms of total degree `order`, order in 1..4.
ComplexMatrix series_truncated(const ComplexMatrix& x, const ComplexMatrix& y,
                               int order);

/// Scaling-and-squaring Taylor exponential. Fallback for comparing series
/// truncations against true exponential products; structured generators are
/// exponentiated in closed form elsewhere.
ComplexMatrix expm(const ComplexMatrix& m);

}  // namespace permdyn::bch
