#include "permdyn/bch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "permdyn/quantum_lab.hpp"

namespace permdyn::bch {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dense(int spins, int cap_spins) {
  if (spins > cap_spins) {
    throw std::invalid_argument("dense operator on 2^" + std::to_string(spins) +
                                " states exceeds the cap of 2S <= " +
                                std::to_string(cap_spins));
  }
}

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

Matrix4 kron2(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

// (sigma . sigma + 1)/2 on two sites, basis index = 2*bit_first + bit_second.
Matrix4 two_site_exchange() {
  Matrix2 sx, sy, sz, id;
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  id.setIdentity();
  return 0.5 * (kron2(sx, sx) + kron2(sy, sy) + kron2(sz, sz) + kron2(id, id));
}

Complex i_power(int exponent) {
  switch (((exponent % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

TranspositionSet even_sweep(int spins) {
  TranspositionSet sweep;
  sweep.parity = TranspositionSet::Parity::EvenSweep;
  for (int l = 1; 2 * l <= spins; ++l) {
    const int a = 2 * l;
    const int b = (2 * l) % spins + 1;
    sweep.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return sweep;
}

TranspositionSet odd_sweep(int spins) {
  TranspositionSet sweep;
  sweep.parity = TranspositionSet::Parity::OddSweep;
  for (int k = 1; 2 * k <= spins; ++k) {
    sweep.pairs.emplace_back(2 * k - 1, 2 * k);
  }
  return sweep;
}

ComplexMatrix transposition_matrix(int i, int j, int spins, int cap_spins) {
  if (spins < 2) throw std::invalid_argument("need at least two sites");
  check_dense(spins, cap_spins);
  if (i == j) throw std::invalid_argument("exchange needs two distinct sites");
  if (i < 1 || i > spins || j < 1 || j > spins) {
    throw std::out_of_range("site index outside 1..2S");
  }
  const Matrix4 local = two_site_exchange();
  const std::uint64_t dim = 1ull << spins;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const std::uint64_t bi = 1ull << (i - 1);
  const std::uint64_t bj = 1ull << (j - 1);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const int lc = static_cast<int>(((col & bi) ? 2 : 0) | ((col & bj) ? 1 : 0));
    for (int lr = 0; lr < 4; ++lr) {
      const Complex v = local(lr, lc);
      if (v == Complex(0.0, 0.0)) continue;
      std::uint64_t row = col & ~(bi | bj);
      if (lr & 2) row |= bi;
      if (lr & 1) row |= bj;
      out(row, col) += v;
    }
  }
  return out;
}

ComplexMatrix sweep_sum(const TranspositionSet& sweep, int spins,
                        int cap_spins) {
  check_dense(spins, cap_spins);
  const std::uint64_t dim = 1ull << spins;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& [i, j] : sweep.pairs) {
    out += transposition_matrix(i, j, spins, cap_spins);
  }
  return out;
}

double transposition_exponential_residual(int i, int j, int spins, int k,
                                          int cap_spins) {
  const ComplexMatrix p = transposition_matrix(i, j, spins, cap_spins);
  const double theta = (2.0 * k + 0.5) * kPi;
  const std::uint64_t dim = 1ull << spins;
  // P^2 = 1, so exp(-i theta P) = cos(theta) - i sin(theta) P exactly
  const ComplexMatrix e =
      std::cos(theta) * ComplexMatrix::Identity(dim, dim) -
      Complex(0.0, 1.0) * std::sin(theta) * p;
  return max_abs_diff(p, Complex(0.0, 1.0) * e);
}

double product_identity_residual(const ChainModel& chain, SweepOrdering ordering,
                                 int cap_spins) {
  const int n = chain.spins();
  check_dense(n, cap_spins);
  const ComplexMatrix odd = sweep_sum(odd_sweep(n), n, cap_spins);
  const ComplexMatrix even = sweep_sum(even_sweep(n), n, cap_spins);
  const Complex half_turn(0.0, -kPi / 2.0);
  const ComplexMatrix exp_odd = expm(half_turn * odd);
  const ComplexMatrix exp_even = expm(half_turn * even);
  const ComplexMatrix product =
      i_power(n) * (ordering == SweepOrdering::OddPairsLeft
                        ? (exp_odd * exp_even).eval()
                        : (exp_even * exp_odd).eval());
  return max_abs_diff(product, dense_update_matrix(chain, cap_spins));
}

namespace {

// Residual of one column of exp(-i H T) against the matching column of U.
double column_residual(const ChainModel& chain, const OperatorPolynomial& poly,
                       const SpinConfig& basis) {
  QuantumState column = evolve(chain, poly, QuantumState::basis(basis), poly.T);
  column.add(chain.apply_update(basis), Complex(-1.0, 0.0));
  double residual = 0.0;
  for (const auto& [state, a] : column.amplitudes()) {
    residual = std::max(residual, std::abs(a));
  }
  return residual;
}

}  // namespace

double terminating_exp_residual_dense(const ChainModel& chain,
                                      const OperatorPolynomial& poly,
                                      int cap_spins) {
  const int n = chain.spins();
  check_dense(n, cap_spins);
  double residual = 0.0;
  for (std::uint64_t b = 0; b < (1ull << n); ++b) {
    residual = std::max(
        residual, column_residual(chain, poly, SpinConfig::from_bits(b, n)));
  }
  return residual;
}

double terminating_exp_residual_orbit(const ChainModel& chain,
                                      const OperatorPolynomial& poly,
                                      const std::vector<SpinConfig>& probes) {
  double residual = 0.0;
  for (const auto& probe : probes) {
    residual = std::max(residual, column_residual(chain, poly, probe));
  }
  return residual;
}

ComplexMatrix series_truncated(const ComplexMatrix& x, const ComplexMatrix& y,
                               int order) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols()) {
    throw std::invalid_argument("series needs square matrices of equal size");
  }
  if (order < 1 || order > 4) {
    throw std::invalid_argument("series order must lie in 1..4");
  }
  auto comm = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a * b - b * a).eval();
  };
  ComplexMatrix z = x + y;
  if (order >= 2) z += 0.5 * comm(x, y);
  if (order >= 3) {
    z += (comm(x, comm(x, y)) + comm(y, comm(y, x))) / 12.0;
  }
  if (order >= 4) z -= comm(y, comm(x, comm(x, y))) / 24.0;
  return z;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix exponential needs a square matrix");
  }
  const double norm = m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::exp2(squarings) > 0.5) ++squarings;
  const ComplexMatrix a = m / std::exp2(squarings);
  ComplexMatrix sum = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix term = sum;
  for (int k = 1; k <= 32; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    sum += term;
    if (max_abs(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

}  // namespace permdyn::bch
