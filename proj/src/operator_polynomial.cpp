#include "permdyn/operator_polynomial.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace permdyn {

namespace {

constexpr double kPi = std::numbers::pi;

void check_synthesis_args(int S, double T) {
  if (S < 2) {
    throw std::invalid_argument("chain Hamiltonian needs S >= 2, got S = " +
                                std::to_string(S));
  }
  if (!(T > 0.0)) throw std::invalid_argument("time step T must be positive");
}

void check_chain_match(const ChainModel& chain, const OperatorPolynomial& poly) {
  if (poly.S != chain.S()) {
    throw std::invalid_argument("operator polynomial built for S = " +
                                std::to_string(poly.S) +
                                ", chain has S = " + std::to_string(chain.S()));
  }
}

int checked_dense_spins(const ChainModel& chain, int cap_spins) {
  if (chain.spins() > cap_spins) {
    throw std::invalid_argument("dense representation of 2^" +
                                std::to_string(chain.spins()) +
                                " states exceeds the cap of 2S <= " +
                                std::to_string(cap_spins));
  }
  return chain.spins();
}

}  // namespace

bool OperatorPolynomial::is_hermitian(double tol) const {
  if (std::abs(c[0].imag()) > tol) return false;
  for (int n = 1; n < S; ++n) {
    if (std::abs(c[n] - std::conj(c[S - n])) > tol) return false;
  }
  return true;
}

OperatorPolynomial OperatorPolynomial::hermitized() const {
  OperatorPolynomial out = *this;
  out.c[0] = Complex(c[0].real(), 0.0);
  for (int n = 1; 2 * n <= S; ++n) {
    if (2 * n == S) {
      out.c[n] = Complex(c[n].real(), 0.0);
    } else {
      const Complex avg = 0.5 * (c[n] + std::conj(c[S - n]));
      out.c[n] = avg;
      out.c[S - n] = std::conj(avg);
    }
  }
  return out;
}

OperatorPolynomial synthesize_exact(int S, double T) {
  check_synthesis_args(S, T);
  OperatorPolynomial poly{S, T, std::vector<Complex>(S)};
  const double scale = kPi / (S * T);
  poly.c[0] = Complex(scale * (S - 1), 0.0);
  for (int n = 1; 2 * n <= S; ++n) {
    if (2 * n == S) {
      poly.c[n] = Complex(-scale, 0.0);  // cot(pi/2) = 0
    } else {
      const double arg = kPi * n / S;
      const Complex value = scale * Complex(-1.0, -std::cos(arg) / std::sin(arg));
      poly.c[n] = value;
      poly.c[S - n] = std::conj(value);
    }
  }
  return poly;
}

OperatorPolynomial synthesize_reduced(int S, double T) {
  check_synthesis_args(S, T);
  OperatorPolynomial poly{S, T, std::vector<Complex>(S)};
  const double scale = kPi / (S * T);
  poly.c[0] = Complex(kPi / T, 0.0);
  for (int n = 1; 2 * n <= S; ++n) {
    if (2 * n == S) {
      poly.c[n] = Complex(0.0, 0.0);
    } else {
      const double arg = kPi * n / S;
      const Complex value = Complex(0.0, -scale * std::cos(arg) / std::sin(arg));
      poly.c[n] = value;
      poly.c[S - n] = std::conj(value);
    }
  }
  return poly;
}

OperatorPolynomial multiply(const OperatorPolynomial& a,
                            const OperatorPolynomial& b) {
  if (a.S != b.S) {
    throw std::invalid_argument("cannot multiply polynomials of different S");
  }
  OperatorPolynomial out{a.S, a.T, std::vector<Complex>(a.S, Complex(0.0, 0.0))};
  for (int i = 0; i < a.S; ++i) {
    if (a.c[i] == Complex(0.0, 0.0)) continue;
    for (int j = 0; j < b.S; ++j) {
      out.c[(i + j) % a.S] += a.c[i] * b.c[j];
    }
  }
  return out;
}

QuantumState apply_hamiltonian(const ChainModel& chain,
                               const OperatorPolynomial& poly,
                               const QuantumState& psi) {
  check_chain_match(chain, poly);
  if (psi.spins() != chain.spins()) {
    throw std::invalid_argument("state size does not match the chain");
  }
  QuantumState out(psi.spins());
  for (const auto& [basis, amplitude] : psi.amplitudes()) {
    SpinConfig cur = basis;
    for (int n = 0; n < poly.S; ++n) {
      if (poly.c[n] != Complex(0.0, 0.0)) {
        out.add(cur, poly.c[n] * amplitude);
      }
      if (n + 1 < poly.S) cur = chain.apply_update(cur);
    }
  }
  out.prune();
  return out;
}

std::vector<Complex> orbit_spectrum(const OperatorPolynomial& poly,
                                    const OrbitRecord& orbit) {
  if (orbit.representative.spins() != 2 * poly.S) {
    throw std::invalid_argument("orbit comes from a different chain size");
  }
  const long L = orbit.length;
  std::vector<Complex> roots(L);
  for (long m = 0; m < L; ++m) {
    roots[m] = std::polar(1.0, -2.0 * kPi * static_cast<double>(m) / L);
  }
  std::vector<Complex> out(L);
  for (long r = 0; r < L; ++r) {
    Complex sum(0.0, 0.0);
    for (int n = 0; n < poly.S; ++n) {
      sum += poly.c[n] * roots[(static_cast<long>(n) * r) % L];
    }
    out[r] = sum;
  }
  return out;
}

ComplexMatrix dense_update_matrix(const ChainModel& chain, int cap_spins) {
  const int n = checked_dense_spins(chain, cap_spins);
  const auto map = chain.powered_map(1);
  const std::uint64_t dim = 1ull << n;
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    std::uint64_t target = 0;
    for (int p = 0; p < n; ++p) {
      if ((b >> p) & 1) target |= 1ull << map[p];
    }
    u(target, b) = Complex(1.0, 0.0);
  }
  return u;
}

ComplexMatrix dense_hamiltonian(const ChainModel& chain,
                                const OperatorPolynomial& poly,
                                int cap_spins) {
  check_chain_match(chain, poly);
  const int n = checked_dense_spins(chain, cap_spins);
  const auto map = chain.powered_map(1);
  const std::uint64_t dim = 1ull << n;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::uint64_t cur = col;
    for (int k = 0; k < poly.S; ++k) {
      h(cur, col) += poly.c[k];
      std::uint64_t next = 0;
      for (int p = 0; p < n; ++p) {
        if ((cur >> p) & 1) next |= 1ull << map[p];
      }
      cur = next;
    }
  }
  return h;
}

MagnetizedPolynomial add_magnetization_term(OperatorPolynomial poly,
                                            double mu) {
  return MagnetizedPolynomial{std::move(poly), mu};
}

QuantumState apply_hamiltonian(const ChainModel& chain,
                               const MagnetizedPolynomial& h,
                               const QuantumState& psi) {
  QuantumState out = apply_hamiltonian(chain, h.poly, psi);
  if (h.mu != 0.0) {
    for (const auto& [basis, amplitude] : psi.amplitudes()) {
      out.add(basis, h.mu * magnetization(basis).value() * amplitude);
    }
    out.prune();
  }
  return out;
}

ComplexMatrix dense_hamiltonian(const ChainModel& chain,
                                const MagnetizedPolynomial& h,
                                int cap_spins) {
  ComplexMatrix out = dense_hamiltonian(chain, h.poly, cap_spins);
  if (h.mu != 0.0) {
    const int n = chain.spins();
    for (std::uint64_t b = 0; b < (1ull << n); ++b) {
      const int nu = std::popcount(b);
      out(b, b) += h.mu * static_cast<double>(2 * nu - n) / n;
    }
  }
  return out;
}

}  // namespace permdyn
