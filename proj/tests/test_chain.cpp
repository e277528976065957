#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "permdyn/chain.hpp"
#include "permdyn/spin_config.hpp"

using namespace permdyn;

namespace {

SpinConfig random_state(int spins, std::mt19937_64& rng) {
  SpinConfig state(spins);
  for (int p = 1; p <= spins; ++p) state.set_up(p, (rng() >> 40) & 1);
  return state;
}

// Tracks labeled values through the update so permuted positions can be read
// off directly: label_after[q] tells which original position sits at q.
std::vector<int> labels_after_one_update(const ChainModel& chain) {
  const int n = chain.spins();
  std::vector<int> at(n);
  for (int p = 0; p < n; ++p) at[chain.permutation().forward[p]] = p;
  return at;
}

}  // namespace

TEST_CASE("spin config basics") {
  CHECK_THROWS_AS(SpinConfig(3), std::invalid_argument);
  CHECK_THROWS_AS(SpinConfig(2), std::invalid_argument);
  CHECK_THROWS_AS(SpinConfig::from_string("uux"), std::invalid_argument);
  CHECK_THROWS_AS(SpinConfig::from_string("uuxd"), std::invalid_argument);

  const SpinConfig s = SpinConfig::from_string("uuddud");
  CHECK(s.spins() == 6);
  CHECK(s.str() == "uuddud");
  CHECK(s.up(1));
  CHECK(!s.up(3));
  CHECK(s.spin(1) == 1);
  CHECK(s.spin(4) == -1);
  CHECK(SpinConfig::from_bits(s.bits(), 6) == s);
  CHECK_THROWS_AS(s.up(0), std::out_of_range);
  CHECK_THROWS_AS(s.up(7), std::out_of_range);

  // lexicographic order follows the text form, 'd' < 'u'
  CHECK(SpinConfig::from_string("dudu") < SpinConfig::from_string("uddd"));
  CHECK(SpinConfig::from_string("uudd") < SpinConfig::from_string("uuud"));
  CHECK(!(SpinConfig::from_string("uudd") < SpinConfig::from_string("uudd")));

  // multi-word states
  std::mt19937_64 rng(11);
  const SpinConfig big = random_state(200, rng);
  CHECK(SpinConfig::from_string(big.str()) == big);
  CHECK_THROWS_AS(big.bits(), std::logic_error);
}

TEST_CASE("counts, magnetization, spin flip, translate") {
  const SpinConfig all_up = SpinConfig::all_up(6);
  CHECK(count_up_down(all_up) == std::pair<int, int>{6, 0});
  CHECK(magnetization(all_up).value() == 1.0);
  CHECK(magnetization(SpinConfig::from_string("ududud")).num == 0);

  CHECK(spin_flip(all_up) == SpinConfig::all_down(6));
  std::mt19937_64 rng(3);
  const SpinConfig psi = random_state(12, rng);
  CHECK(spin_flip(spin_flip(psi)) == psi);

  CHECK(translate(psi, 0) == psi);
  CHECK_THROWS_AS(translate(psi, 1), std::invalid_argument);
  CHECK_THROWS_AS(translate(psi, -3), std::invalid_argument);
  CHECK(translate(translate(psi, 4), -4) == psi);
}

TEST_CASE("translate moves s1..s6 to positions 3..6,1,2") {
  // shift 2 sends |s1..s6> to |s5,s6,s1,s2,s3,s4>
  const SpinConfig s = SpinConfig::from_string("uuddud");
  // s5='u', s6='d', s1='u', s2='u', s3='d', s4='d'
  CHECK(translate(s, 2).str() == "uduudd");
}

TEST_CASE("update permutation matches the hand-applied pair swaps") {
  // S=3: U|s1..s6> = |s3,s6,s5,s2,s1,s4>
  const ChainModel chain3(3);
  const auto at3 = labels_after_one_update(chain3);
  CHECK(at3 == std::vector<int>{2, 5, 4, 1, 0, 3});

  // S=4: U|s1..s8> = |s3,s8,s5,s2,s7,s4,s1,s6>
  const ChainModel chain4(4);
  const auto at4 = labels_after_one_update(chain4);
  CHECK(at4 == std::vector<int>{2, 7, 4, 1, 6, 3, 0, 5});

  CHECK_THROWS_WITH_AS(ChainModel(1), doctest::Contains("degenerate chain"),
                       std::invalid_argument);
  CHECK_THROWS_AS(ChainModel(0), std::invalid_argument);
}

TEST_CASE("permutation structure") {
  for (int S : {2, 3, 5, 8}) {
    const ChainModel chain(S);
    const auto& perm = chain.permutation();
    std::set<int> targets(perm.forward.begin(), perm.forward.end());
    CHECK(static_cast<int>(targets.size()) == chain.spins());  // bijection
    for (int p = 0; p < chain.spins(); ++p) {
      CHECK(perm.forward[p] % 2 == p % 2);  // parity preserved
      CHECK(perm.inverse[perm.forward[p]] == p);
    }
    // closed form: odd positions step down two, even positions up two
    const int n = chain.spins();
    for (int p = 1; p <= n; ++p) {
      const int expected = p % 2 == 1 ? ((p - 3 + n) % n) : ((p + 1) % n);
      CHECK(perm.forward[p - 1] == expected);
    }
  }
}

TEST_CASE("fast path agrees with literal swaps; powers compose") {
  std::mt19937_64 rng(17);
  for (int S : {2, 3, 4, 7, 25}) {
    const ChainModel chain(S);
    for (int trial = 0; trial < 20; ++trial) {
      const SpinConfig psi = random_state(chain.spins(), rng);
      CHECK(chain.step_by_swaps(psi) == chain.apply_update(psi));
      // n sequential steps == one n-step application
      SpinConfig stepped = psi;
      const int n_steps = 1 + static_cast<int>(rng() % 7);
      for (int i = 0; i < n_steps; ++i) stepped = chain.step_by_swaps(stepped);
      CHECK(stepped == chain.apply_update(psi, n_steps));
    }
  }
}

TEST_CASE("parity transport: odd values land at p-2n, even at p+2n") {
  const ChainModel chain(6);
  const int n = chain.spins();
  std::mt19937_64 rng(23);
  const SpinConfig psi = random_state(n, rng);
  for (int steps : {1, 2, 5, 11}) {
    const SpinConfig evolved = chain.apply_update(psi, steps);
    for (int p = 1; p <= n; ++p) {
      const int q = p % 2 == 1 ? ((p - 1 - 2 * steps) % n + n) % n + 1
                               : ((p - 1 + 2 * steps) % n + n) % n + 1;
      CHECK(evolved.up(q) == psi.up(p));
    }
  }
}

TEST_CASE("update examples") {
  const ChainModel chain(3);
  std::mt19937_64 rng(5);
  const SpinConfig psi = random_state(6, rng);
  CHECK(chain.apply_update(psi, 3) == psi);  // S updates recover the state

  CHECK(chain.apply_update(SpinConfig::all_up(6)) == SpinConfig::all_up(6));
  const SpinConfig alternating = SpinConfig::from_string("ududud");
  CHECK(chain.apply_update(alternating) == alternating);

  CHECK_THROWS_AS(chain.apply_update(SpinConfig::all_up(8)),
                  std::invalid_argument);
}

TEST_CASE("bijectivity and periodicity on random states") {
  std::mt19937_64 rng(29);
  for (int S : {2, 3, 4, 13, 50}) {
    const ChainModel chain(S);
    for (int trial = 0; trial < 10; ++trial) {
      const SpinConfig psi = random_state(chain.spins(), rng);
      CHECK(chain.apply_update(chain.apply_update(psi), 1,
                               Direction::Inverse) == psi);
      CHECK(chain.apply_update(psi, S) == psi);
    }
  }
}

TEST_CASE("orbit of a state") {
  const ChainModel chain4(4);
  SpinConfig single_down = SpinConfig::all_up(8);
  single_down.set_up(4, false);
  const OrbitRecord orbit = chain4.orbit_of(single_down, true);
  CHECK(orbit.length == 4);
  REQUIRE(orbit.states.has_value());
  CHECK(orbit.states->size() == 4);
  CHECK((*orbit.states)[0] == orbit.representative);
  // the representative is the lexicographically smallest member
  for (const auto& member : *orbit.states) {
    CHECK(!(member < orbit.representative));
  }

  CHECK(chain4.orbit_of(SpinConfig::all_up(8)).length == 1);

  const ChainModel chain3(3);
  CHECK(chain3.orbit_of(SpinConfig::from_string("dduuuu")).length == 3);
}

TEST_CASE("orbit lengths divide S exhaustively") {
  for (int S : {2, 3, 4}) {
    const ChainModel chain(S);
    for (std::uint64_t b = 0; b < (1ull << chain.spins()); ++b) {
      const auto orbit = chain.orbit_of(SpinConfig::from_bits(b, chain.spins()));
      CHECK(S % orbit.length == 0);
    }
  }
}

TEST_CASE("orbit enumeration") {
  const ChainModel chain2(2);
  const auto orbits2 = chain2.enumerate_orbits();
  CHECK(orbits2.size() == 10);
  std::map<long, int> histogram;
  long covered = 0;
  for (const auto& orbit : orbits2) {
    histogram[orbit.length] += 1;
    covered += orbit.length;
  }
  CHECK(histogram == std::map<long, int>{{1, 4}, {2, 6}});
  CHECK(covered == 16);

  const ChainModel chain3(3);
  const auto orbits3 = chain3.enumerate_orbits();
  long covered3 = 0;
  for (const auto& orbit : orbits3) {
    covered3 += orbit.length;
    CHECK(3 % orbit.length == 0);
    CHECK(chain3.orbit_of(orbit.representative).representative ==
          orbit.representative);
  }
  CHECK(covered3 == 64);
  // sorted, deterministic
  for (std::size_t i = 1; i < orbits3.size(); ++i) {
    CHECK(orbits3[i - 1].representative < orbits3[i].representative);
  }

  CHECK_THROWS_AS(ChainModel(13).enumerate_orbits(24), std::invalid_argument);
}

TEST_CASE("conservation laws are exact") {
  std::mt19937_64 rng(31);
  const ChainModel chain(64);
  for (int trial = 0; trial < 32; ++trial) {
    const SpinConfig psi = random_state(chain.spins(), rng);
    const SpinConfig next = chain.apply_update(psi);
    CHECK(count_up_down(next) == count_up_down(psi));
    CHECK(magnetization(next) == magnetization(psi));
    CHECK(chain.apply_update(spin_flip(psi)) == spin_flip(next));
    CHECK(chain.apply_update(translate(psi, 6)) == translate(next, 6));
  }
}

TEST_CASE("mover views") {
  const ChainModel chain(4);
  std::mt19937_64 rng(37);
  const SpinConfig psi = random_state(8, rng);

  const MoverView v0 = chain.mover_decompose(psi, 0);
  CHECK(interleave(v0) == psi);
  const MoverView v1 = chain.mover_decompose(chain.apply_update(psi), 1);
  CHECK(mover_check(v0, v1));

  // consecutive views pass for every step along an orbit
  SpinConfig cur = psi;
  for (long s = 0; s < 6; ++s) {
    const MoverView a = chain.mover_decompose(cur, s);
    cur = chain.apply_update(cur);
    const MoverView b = chain.mover_decompose(cur, s + 1);
    CHECK(mover_check(a, b));
  }

  // a non-fixed state paired with itself fails; a fixed one passes
  SpinConfig moving = SpinConfig::all_up(8);
  moving.set_up(2, false);
  const MoverView mv = chain.mover_decompose(moving, 0);
  CHECK(!mover_check(mv, mv));
  const MoverView fixed = chain.mover_decompose(SpinConfig::all_up(8), 0);
  CHECK(mover_check(fixed, fixed));

  const ChainModel other(3);
  CHECK_THROWS_AS(
      mover_check(v0, other.mover_decompose(SpinConfig::all_up(6), 1)),
      std::invalid_argument);
}
