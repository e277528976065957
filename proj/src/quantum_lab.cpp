#include "permdyn/quantum_lab.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace permdyn {

namespace {

constexpr double kPi = std::numbers::pi;

double unit_interval(std::mt19937_64& rng) {
  // top 53 bits -> [0,1); avoids distribution objects so draws are
  // reproducible across standard libraries
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

}  // namespace

OperatorPolynomial approx_hamiltonian(int S, double T) {
  if (S < 3) {
    throw std::invalid_argument(
        "leading-terms Hamiltonian needs S >= 3 so the two tail terms are "
        "distinct");
  }
  if (!(T > 0.0)) throw std::invalid_argument("time step T must be positive");
  OperatorPolynomial poly{S, T, std::vector<Complex>(S, Complex(0.0, 0.0))};
  poly.c[0] = Complex(kPi / T, 0.0);
  poly.c[1] = Complex(0.0, -1.0 / T);
  poly.c[S - 1] = Complex(0.0, 1.0 / T);
  return poly;
}

QuantumState commutator_action(const ChainModel& chain, const SpinConfig& state,
                               bool normalize) {
  QuantumState out(state.spins());
  out.add(chain.apply_update(state, 1, Direction::Forward), Complex(1.0, 0.0));
  out.add(chain.apply_update(state, 1, Direction::Inverse), Complex(-1.0, 0.0));
  out.prune();
  if (normalize && out.support_size() > 0) out.normalize();
  return out;
}

std::vector<Complex> perturbation_deltas(const PerturbationSpec& spec, int S) {
  if (!spec.deltas.empty()) {
    if (static_cast<int>(spec.deltas.size()) != S) {
      throw std::invalid_argument("need one delta per coefficient (S = " +
                                  std::to_string(S) + ")");
    }
    return spec.deltas;
  }
  if (!spec.seed.has_value()) {
    throw std::invalid_argument(
        "perturbation needs explicit deltas or a seed");
  }
  std::mt19937_64 rng(*spec.seed);
  std::vector<Complex> deltas(S);
  for (auto& d : deltas) {
    const double re = 2.0 * unit_interval(rng) - 1.0;
    const double im = 2.0 * unit_interval(rng) - 1.0;
    d = Complex(re, im);
  }
  return deltas;
}

OperatorPolynomial perturb(const OperatorPolynomial& poly,
                           const PerturbationSpec& spec) {
  if (spec.epsilon < 0.0) {
    throw std::invalid_argument("perturbation strength must be >= 0");
  }
  if (spec.epsilon == 0.0) return poly;
  const auto deltas = perturbation_deltas(spec, poly.S);
  OperatorPolynomial out = poly;
  for (int n = 0; n < poly.S; ++n) out.c[n] += spec.epsilon * deltas[n];
  return spec.hermitize ? out.hermitized() : out;
}

namespace {

QuantumState evolve_orbitwise(const ChainModel& chain,
                              const OperatorPolynomial& poly, double mu,
                              const QuantumState& psi, double t) {
  if (poly.S != chain.S()) {
    throw std::invalid_argument("operator polynomial built for a different chain");
  }
  if (psi.spins() != chain.spins()) {
    throw std::invalid_argument("state size does not match the chain");
  }
  QuantumState out(psi.spins());
  std::map<SpinConfig, bool> claimed;
  for (const auto& [start, unused] : psi.amplitudes()) {
    if (claimed.count(start)) continue;
    // walk the full orbit of this support state
    std::vector<SpinConfig> orbit_states;
    std::vector<Complex> a;
    SpinConfig cur = start;
    do {
      claimed[cur] = true;
      orbit_states.push_back(cur);
      a.push_back(psi.amplitude(cur));
      cur = chain.apply_update(cur);
    } while (!(cur == start));
    const long L = static_cast<long>(orbit_states.size());

    std::vector<Complex> energies =
        orbit_spectrum(poly, OrbitRecord{start, L, std::nullopt});
    if (mu != 0.0) {
      const double m = magnetization(start).value();  // constant on the orbit
      for (auto& e : energies) e += mu * m;
    }

    std::vector<Complex> roots(L);
    for (long m = 0; m < L; ++m) {
      roots[m] = std::polar(1.0, 2.0 * kPi * static_cast<double>(m) / L);
    }
    // mode r: amplitude f_r = sum_j a_j w_r^{-j}, then phase by its energy
    std::vector<Complex> modes(L);
    for (long r = 0; r < L; ++r) {
      Complex f(0.0, 0.0);
      for (long j = 0; j < L; ++j) {
        f += a[j] * std::conj(roots[(r * j) % L]);
      }
      modes[r] = f * std::exp(Complex(0.0, -1.0) * energies[r] * t);
    }
    for (long j = 0; j < L; ++j) {
      Complex value(0.0, 0.0);
      for (long r = 0; r < L; ++r) {
        value += modes[r] * roots[(r * j) % L];
      }
      out.add(orbit_states[j], value / static_cast<double>(L));
    }
  }
  out.prune();
  return out;
}

}  // namespace

QuantumState evolve(const ChainModel& chain, const OperatorPolynomial& poly,
                    const QuantumState& psi, double t) {
  return evolve_orbitwise(chain, poly, 0.0, psi, t);
}

QuantumState evolve(const ChainModel& chain, const MagnetizedPolynomial& h,
                    const QuantumState& psi, double t) {
  return evolve_orbitwise(chain, h.poly, h.mu, psi, t);
}

QuantumState evolve_dense(const ChainModel& chain, const ComplexMatrix& h,
                          const QuantumState& psi, double t, int cap_spins) {
  const int n = chain.spins();
  if (n > cap_spins) {
    throw std::invalid_argument("dense evolution exceeds the cap of 2S <= " +
                                std::to_string(cap_spins));
  }
  const std::uint64_t dim = 1ull << n;
  if (h.rows() != static_cast<long>(dim) || h.cols() != static_cast<long>(dim)) {
    throw std::invalid_argument("matrix dimension does not match the chain");
  }
  if (hermiticity_residual(h) > 1e-10) {
    throw std::invalid_argument("dense evolution needs a Hermitian matrix");
  }
  if (psi.spins() != n) {
    throw std::invalid_argument("state size does not match the chain");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  for (const auto& [state, a] : psi.amplitudes()) v(state.bits()) = a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  ComplexVector w = solver.eigenvectors().adjoint() * v;
  for (std::uint64_t k = 0; k < dim; ++k) {
    w(k) *= std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  v = solver.eigenvectors() * w;
  QuantumState out(n);
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (std::abs(v(b)) >= QuantumState::kPruneThreshold) {
      out.set(SpinConfig::from_bits(b, n), v(b));
    }
  }
  return out;
}

QuantumState apply_update(const ChainModel& chain, const QuantumState& psi,
                          long n, Direction dir) {
  if (psi.spins() != chain.spins()) {
    throw std::invalid_argument("state size does not match the chain");
  }
  QuantumState out(psi.spins());
  for (const auto& [state, a] : psi.amplitudes()) {
    out.add(chain.apply_update(state, n, dir), a);
  }
  return out;
}

double entanglement_entropy(const QuantumState& psi, int cut, int cap_spins) {
  const int n = psi.spins();
  if (cut < 1 || cut >= n) {
    throw std::invalid_argument("cut must split positions 1..c | c+1..2S with "
                                "1 <= c <= 2S-1");
  }
  if (n > cap_spins) {
    throw std::invalid_argument("entropy computation exceeds the cap of 2S <= " +
                                std::to_string(cap_spins));
  }
  const double nrm = psi.norm();
  if (nrm == 0.0) {
    throw std::domain_error("entropy of the zero state is undefined");
  }
  // Group the support by one block's substring; the Gram matrix of the other
  // block's component vectors has the reduced state's nonzero spectrum.
  // Group by whichever block has fewer distinct substrings.
  auto group = [&psi, nrm](int lo, int hi) {
    std::map<std::string, std::map<std::string, Complex>> blocks;
    for (const auto& [state, a] : psi.amplitudes()) {
      const std::string text = state.str();
      blocks[text.substr(lo, hi - lo)]
            [text.substr(0, lo) + text.substr(hi)] += a / nrm;
    }
    return blocks;
  };
  auto left = group(0, cut);
  auto right = group(cut, n);
  const auto& blocks = left.size() <= right.size() ? left : right;

  const int k = static_cast<int>(blocks.size());
  ComplexMatrix gram(k, k);
  int i = 0;
  for (auto it = blocks.begin(); it != blocks.end(); ++it, ++i) {
    int j = 0;
    for (auto jt = blocks.begin(); jt != blocks.end(); ++jt, ++j) {
      Complex overlap(0.0, 0.0);
      for (const auto& [key, a] : it->second) {
        const auto found = jt->second.find(key);
        if (found != jt->second.end()) {
          overlap += std::conj(found->second) * a;
        }
      }
      gram(i, j) = overlap;
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram);
  double entropy = 0.0;
  for (int e = 0; e < k; ++e) {
    const double lambda = solver.eigenvalues()(e);
    if (lambda > 1e-12) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

SpinConfig bell_probe_state(int spins) {
  if (spins < 8) {
    throw std::invalid_argument("probe needs a chain of at least 8 spins");
  }
  SpinConfig state = SpinConfig::all_up(spins);
  state.set_up(4, false);
  state.set_up(5, false);
  return state;
}

}  // namespace permdyn
