#include "permdyn/cogwheel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace permdyn {

namespace {
constexpr double kPi = std::numbers::pi;
}

CogwheelSystem CogwheelSystem::plain(int N, double T) {
  CogwheelSystem sys{N, T, {}};
  sys.validate();
  return sys;
}

double CogwheelSystem::phase(int k) const {
  return phases.empty() ? 0.0 : phases[k - 1];
}

double CogwheelSystem::phase_sum() const {
  double sum = 0.0;
  for (const double p : phases) sum += p;
  return sum;
}

void CogwheelSystem::validate() const {
  if (N < 1) throw std::invalid_argument("cogwheel needs N >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("cogwheel needs T > 0");
  if (!phases.empty() && static_cast<int>(phases.size()) != N) {
    throw std::invalid_argument("cogwheel needs one phase per state");
  }
}

ComplexMatrix standard_permutation_matrix(const CogwheelSystem& sys) {
  sys.validate();
  const int N = sys.N;
  ComplexMatrix u = ComplexMatrix::Zero(N, N);
  for (int k = 1; k < N; ++k) {
    u(k - 1, k) = std::polar(1.0, sys.phase(k));
  }
  u(N - 1, 0) = std::polar(1.0, sys.phase(N));
  return u;
}

std::vector<double> cogwheel_spectrum(const CogwheelSystem& sys) {
  sys.validate();
  const double sum = sys.phase_sum();
  std::vector<double> out(sys.N);
  for (int n = 1; n <= sys.N; ++n) {
    out[n - 1] = (2.0 * kPi * (n - 1) - sum) / (sys.N * sys.T);
  }
  return out;
}

double eigenvector_phase(int N, int n, int m) {
  if (N < 1) throw std::invalid_argument("cogwheel needs N >= 1");
  if (n < 1 || n > N || m < 1 || m > N) {
    throw std::out_of_range("eigenvector phase indices must lie in 1..N");
  }
  // nm - n - m + 1 = (n-1)(m-1); reduce in integers so the result is an
  // exact multiple of 2 pi / N in [0, 2 pi).
  const long long r =
      (static_cast<long long>(n - 1) * (m - 1)) % N;
  return 2.0 * kPi * static_cast<double>(r) / N;
}

ComplexMatrix diagonalizer(int N) {
  if (N < 1) throw std::invalid_argument("cogwheel needs N >= 1");
  ComplexMatrix d(N, N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (int n = 1; n <= N; ++n) {
    for (int m = 1; m <= N; ++m) {
      d(n - 1, m - 1) = scale * std::polar(1.0, eigenvector_phase(N, n, m));
    }
  }
  return d;
}

ComplexMatrix cogwheel_hamiltonian(int N, double T) {
  if (N < 1) throw std::invalid_argument("cogwheel needs N >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("cogwheel needs T > 0");
  const double scale = kPi / (N * T);
  // one value per difference class d = (n - m) mod N; cot is pi-periodic,
  // so cot(pi (n-m)/N) = cot(pi d / N), and the conjugate pairing keeps the
  // matrix exactly Hermitian and exactly circulant
  std::vector<Complex> value(N);
  value[0] = Complex(scale * (N - 1), 0.0);
  for (int d = 1; 2 * d <= N; ++d) {
    if (2 * d == N) {
      value[d] = Complex(-scale, 0.0);  // cot(pi/2) = 0
    } else {
      const double arg = kPi * d / N;
      value[d] = scale * Complex(-1.0, std::cos(arg) / std::sin(arg));
      value[N - d] = std::conj(value[d]);
    }
  }
  ComplexMatrix h(N, N);
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      h(n, m) = value[((n - m) % N + N) % N];
    }
  }
  return h;
}

ComplexMatrix cogwheel_exponential(int N, double T) {
  const ComplexMatrix d = diagonalizer(N);
  const auto energies = cogwheel_spectrum(CogwheelSystem::plain(N, T));
  ComplexVector phases(N);
  for (int n = 0; n < N; ++n) {
    phases(n) = std::polar(1.0, -energies[n] * T);
  }
  return d.adjoint() * phases.asDiagonal() * d;
}

}  // namespace permdyn
