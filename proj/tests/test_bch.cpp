#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "permdyn/bch.hpp"
#include "permdyn/quantum_lab.hpp"

using namespace permdyn;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct basis-state swap of sites i and j (oracle for the Pauli build).
ComplexMatrix swap_oracle(int i, int j, int spins) {
  const std::uint64_t dim = 1ull << spins;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const std::uint64_t bi = 1ull << (i - 1);
  const std::uint64_t bj = 1ull << (j - 1);
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::uint64_t row = col;
    const bool vi = col & bi;
    const bool vj = col & bj;
    row = (row & ~(bi | bj)) | (vj ? bi : 0) | (vi ? bj : 0);
    out(row, col) = Complex(1.0, 0.0);
  }
  return out;
}

ComplexMatrix random_matrix(int dim, std::mt19937_64& rng) {
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      m(r, c) = Complex(2.0 * static_cast<double>(rng() >> 11) * 0x1p-53 - 1.0,
                        2.0 * static_cast<double>(rng() >> 11) * 0x1p-53 - 1.0);
    }
  }
  return m / max_abs(m);
}

}  // namespace

TEST_CASE("sweep pair sets") {
  const auto even = bch::even_sweep(8);
  CHECK(even.pairs == std::vector<std::pair<int, int>>{
                          {2, 3}, {4, 5}, {6, 7}, {1, 8}});
  const auto odd = bch::odd_sweep(8);
  CHECK(odd.pairs == std::vector<std::pair<int, int>>{
                         {1, 2}, {3, 4}, {5, 6}, {7, 8}});
  // disjoint within each sweep
  for (const auto& sweep : {even, odd}) {
    std::set<int> seen;
    for (const auto& [a, b] : sweep.pairs) {
      CHECK(a < b);
      CHECK(seen.insert(a).second);
      CHECK(seen.insert(b).second);
    }
  }
}

TEST_CASE("exchange operator from Pauli products") {
  // two sites: 1s at (1,1), (4,4), (2,3), (3,2)
  const ComplexMatrix p = bch::transposition_matrix(1, 2, 2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = expected(1, 2) = expected(2, 1) =
      Complex(1.0, 0.0);
  CHECK(max_abs_diff(p, expected) <= 1e-15);

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 6; ++trial) {
    const int spins = 6;
    const int i = 1 + static_cast<int>(rng() % spins);
    int j = 1 + static_cast<int>(rng() % spins);
    while (j == i) j = 1 + static_cast<int>(rng() % spins);
    const ComplexMatrix m = bch::transposition_matrix(i, j, spins);
    CHECK(max_abs_diff(m, swap_oracle(i, j, spins)) <= 1e-15);
    const std::uint64_t dim = 1ull << spins;
    CHECK(max_abs_diff(m * m, ComplexMatrix::Identity(dim, dim)) <= 1e-15);
  }

  CHECK_THROWS_AS(bch::transposition_matrix(2, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(bch::transposition_matrix(1, 5, 4), std::out_of_range);
  CHECK_THROWS_AS(bch::transposition_matrix(1, 2, 16), std::invalid_argument);
}

TEST_CASE("exchanges on overlapping pairs do not commute") {
  const ComplexMatrix p12 = bch::transposition_matrix(1, 2, 4);
  const ComplexMatrix p23 = bch::transposition_matrix(2, 3, 4);
  CHECK(max_abs(p12 * p23 - p23 * p12) > 0.5);

  // P12 P23 |abc.> = |cab.> != |bca.> = P23 P12 |abc.>
  // a at position 1, b at 2, c at 3; pick a=u, b=d, c=d distinctively
  const SpinConfig abc = SpinConfig::from_string("uddu");
  ComplexVector v = ComplexVector::Zero(16);
  v(abc.bits()) = 1.0;
  const ComplexVector lhs = p12 * (p23 * v);
  const ComplexVector rhs = p23 * (p12 * v);
  const SpinConfig cab = SpinConfig::from_string("dudu");
  const SpinConfig bca = SpinConfig::from_string("dduu");
  CHECK(lhs(cab.bits()) == Complex(1.0, 0.0));
  CHECK(rhs(bca.bits()) == Complex(1.0, 0.0));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() > 0.5);
}

TEST_CASE("exchange operators within one sweep commute") {
  const int spins = 6;
  for (const auto& sweep : {bch::even_sweep(spins), bch::odd_sweep(spins)}) {
    for (std::size_t a = 0; a < sweep.pairs.size(); ++a) {
      for (std::size_t b = a + 1; b < sweep.pairs.size(); ++b) {
        const ComplexMatrix pa = bch::transposition_matrix(
            sweep.pairs[a].first, sweep.pairs[a].second, spins);
        const ComplexMatrix pb = bch::transposition_matrix(
            sweep.pairs[b].first, sweep.pairs[b].second, spins);
        CHECK(max_abs(pa * pb - pb * pa) == 0.0);
      }
    }
  }
}

TEST_CASE("closed-form exchange exponential") {
  for (int k : {0, 1, 2}) {
    CHECK(bch::transposition_exponential_residual(1, 2, 4, k) <= 1e-12);
    CHECK(bch::transposition_exponential_residual(3, 6, 6, k) <= 1e-12);
  }
  // with angle pi instead of pi/2 the exponential is a phase, not the swap
  const ComplexMatrix p = bch::transposition_matrix(1, 2, 4);
  const ComplexMatrix e =
      std::cos(kPi) * ComplexMatrix::Identity(16, 16) -
      Complex(0.0, 1.0) * std::sin(kPi) * p;
  const double wrong_angle_residual = max_abs_diff(p, Complex(0.0, 1.0) * e);
  MESSAGE("angle pi residual: ", wrong_angle_residual);
  CHECK(wrong_angle_residual > 1.0);
}

TEST_CASE("sweep exponential factorizes into commuting factors") {
  for (int spins : {4, 6}) {
    for (const auto& sweep : {bch::even_sweep(spins), bch::odd_sweep(spins)}) {
      const ComplexMatrix sum = bch::sweep_sum(sweep, spins);
      const ComplexMatrix via_expm = bch::expm(Complex(0.0, -kPi / 2.0) * sum);
      const std::uint64_t dim = 1ull << spins;
      ComplexMatrix split = ComplexMatrix::Identity(dim, dim);
      for (const auto& [i, j] : sweep.pairs) {
        split = (split * (Complex(0.0, -1.0) *
                          bch::transposition_matrix(i, j, spins)))
                    .eval();
      }
      CHECK(max_abs_diff(via_expm, split) <= 1e-12);
      CHECK(unitarity_residual(via_expm) <= 1e-12);
    }
  }
}

TEST_CASE("product identity: sweep order matters") {
  for (int S : {2, 3, 4}) {
    const ChainModel chain(S);
    CHECK(bch::product_identity_residual(chain, bch::SweepOrdering::OddPairsLeft) <=
          1e-10);
  }
  // with the factors swapped the product lands on the inverse update; the two
  // coincide only when U is an involution (S = 2)
  const ChainModel chain2(2);
  CHECK(bch::product_identity_residual(chain2, bch::SweepOrdering::EvenPairsLeft) <=
        1e-10);
  const ChainModel chain3(3);
  const double swapped =
      bch::product_identity_residual(chain3, bch::SweepOrdering::EvenPairsLeft);
  MESSAGE("swapped ordering residual at 2S=6: ", swapped);
  CHECK(swapped > 0.5);
}

TEST_CASE("scalar prefactors cancel") {
  for (int S : {2, 3, 4, 5}) {
    Complex pref(1.0, 0.0);
    // i^{2S} from the identity, (-i)^S from each factorized sweep
    for (int k = 0; k < 2 * S; ++k) pref *= Complex(0.0, 1.0);
    for (int k = 0; k < 2 * S; ++k) pref *= Complex(0.0, -1.0);
    CHECK(std::abs(pref - Complex(1.0, 0.0)) <= 1e-15);
  }
}

TEST_CASE("one-step identity residuals") {
  const ChainModel chain(4);
  CHECK(bch::terminating_exp_residual_dense(chain, synthesize_exact(4, 1.0)) <=
        1e-10);

  // zero-mode orbits are fixed by the exponential
  const std::vector<SpinConfig> fixed = {SpinConfig::all_up(8),
                                         SpinConfig::all_down(8)};
  CHECK(bch::terminating_exp_residual_orbit(chain, synthesize_exact(4, 1.0),
                                            fixed) <= 1e-12);

  CHECK_THROWS_AS(
      bch::terminating_exp_residual_dense(ChainModel(10), synthesize_exact(10, 1.0), 14),
      std::invalid_argument);
}

TEST_CASE("one-step identity on a long chain, per-orbit") {
  const int S = 500;
  const ChainModel chain(S);
  const OperatorPolynomial poly = synthesize_exact(S, 1.0);
  std::mt19937_64 rng(89);
  std::vector<SpinConfig> probes;
  for (int i = 0; i < 100; ++i) {
    SpinConfig state(2 * S);
    for (int p = 1; p <= 2 * S; ++p) state.set_up(p, (rng() >> 40) & 1);
    probes.push_back(state);
  }
  CHECK(bch::terminating_exp_residual_orbit(chain, poly, probes) <= 1e-12);
}

TEST_CASE("truncated commutator series") {
  std::mt19937_64 rng(97);
  const ComplexMatrix a = random_matrix(4, rng);
  const ComplexMatrix b = random_matrix(4, rng);

  // commuting inputs collapse to the sum at every order
  const ComplexMatrix a2 = a * a;
  for (int order = 1; order <= 4; ++order) {
    CHECK(max_abs_diff(bch::series_truncated(a, a2, order), a + a2) <= 1e-12);
    CHECK(max_abs_diff(bch::series_truncated(a, a, order), 2.0 * a) <= 1e-14);
  }

  CHECK_THROWS_AS(bch::series_truncated(a, ComplexMatrix::Zero(3, 3), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(bch::series_truncated(a, b, 0), std::invalid_argument);
  CHECK_THROWS_AS(bch::series_truncated(a, b, 5), std::invalid_argument);

  // the order-4 truncation leaves a fifth-order defect: halving the inputs
  // shrinks the residual of exp(Z) vs exp(X)exp(Y) by about 2^5
  auto residual = [&](double scale) {
    const ComplexMatrix x = scale * a;
    const ComplexMatrix y = scale * b;
    const ComplexMatrix z = bch::series_truncated(x, y, 4);
    return max_abs_diff(bch::expm(z), bch::expm(x) * bch::expm(y));
  };
  const double coarse = residual(0.2);
  const double fine = residual(0.1);
  CHECK(coarse / fine > 20.0);
  CHECK(coarse / fine < 44.0);
}

TEST_CASE("series truncation cannot reproduce the sweep product") {
  // the terminating closed form is exact; the generic series at order 4 is not
  const int spins = 4;
  const ComplexMatrix x =
      Complex(0.0, -kPi / 2.0) * bch::sweep_sum(bch::odd_sweep(spins), spins);
  const ComplexMatrix y =
      Complex(0.0, -kPi / 2.0) * bch::sweep_sum(bch::even_sweep(spins), spins);
  const ComplexMatrix z = bch::series_truncated(x, y, 4);
  const double residual = max_abs_diff(bch::expm(z), bch::expm(x) * bch::expm(y));
  MESSAGE("order-4 series residual for the sweep generators: ", residual);
  CHECK(residual > 1e-2);
}

TEST_CASE("generic matrix exponential") {
  // exp on a diagonal matrix
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = Complex(0.3, -0.2);
  d(1, 1) = Complex(-1.0, 0.8);
  d(2, 2) = Complex(2.0, 0.0);
  const ComplexMatrix e = bch::expm(d);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(e(i, i) - std::exp(d(i, i))) <= 1e-14);
  }
  CHECK(std::abs(e(0, 1)) == 0.0);

  // exp(-i theta P) = cos(theta) - i sin(theta) P for an involution
  const ComplexMatrix p = bch::transposition_matrix(1, 3, 4);
  const double theta = 0.77;
  const ComplexMatrix closed =
      std::cos(theta) * ComplexMatrix::Identity(16, 16) -
      Complex(0.0, 1.0) * std::sin(theta) * p;
  CHECK(max_abs_diff(bch::expm(Complex(0.0, -theta) * p), closed) <= 1e-13);
}
