#include "permdyn/chain.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace permdyn {

namespace {

// Position-lexicographic comparison on packed states (down < up at the
// first differing position = lowest differing bit).
bool lex_less_bits(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return ((a >> std::countr_zero(diff)) & 1) == 0;
}

}  // namespace

ChainModel::ChainModel(int S) : S_(S) {
  if (S < 2) {
    throw std::invalid_argument("degenerate chain: need S >= 2, got S = " +
                                std::to_string(S));
  }
  const int n = 2 * S;
  // Track where each original position ends up under one update.
  std::vector<int> origin(n);
  std::iota(origin.begin(), origin.end(), 0);
  // even pairs (2l, 2l+1), l = 1..S, with (2S, 2S+1) wrapping to (2S, 1)
  for (int l = 1; l <= S; ++l) {
    std::swap(origin[2 * l - 1], origin[(2 * l) % n]);
  }
  // odd pairs (2k-1, 2k), k = 1..S
  for (int k = 1; k <= S; ++k) {
    std::swap(origin[2 * k - 2], origin[2 * k - 1]);
  }
  perm_.forward.resize(n);
  perm_.inverse.resize(n);
  for (int q = 0; q < n; ++q) {
    perm_.forward[origin[q]] = q;
    perm_.inverse[q] = origin[q];
  }
}

void ChainModel::check_state(const SpinConfig& state) const {
  if (state.spins() != spins()) {
    throw std::invalid_argument("state has " + std::to_string(state.spins()) +
                                " spins, chain expects " +
                                std::to_string(spins()));
  }
}

SpinConfig ChainModel::step_by_swaps(const SpinConfig& state) const {
  check_state(state);
  const int n = spins();
  SpinConfig out = state;
  auto swap_pos = [&out](int a, int b) {
    const bool va = out.up(a);
    out.set_up(a, out.up(b));
    out.set_up(b, va);
  };
  for (int l = 1; l <= S_; ++l) swap_pos(2 * l, (2 * l) % n + 1);
  for (int k = 1; k <= S_; ++k) swap_pos(2 * k - 1, 2 * k);
  return out;
}

std::vector<int> ChainModel::powered_map(long n, Direction dir) const {
  const auto& base =
      dir == Direction::Forward ? perm_.forward : perm_.inverse;
  const int size = spins();
  std::vector<int> out(size, -1);
  std::vector<int> cycle;
  for (int start = 0; start < size; ++start) {
    if (out[start] != -1) continue;
    cycle.clear();
    int p = start;
    do {
      cycle.push_back(p);
      p = base[p];
    } while (p != start);
    const long len = static_cast<long>(cycle.size());
    const long shift = ((n % len) + len) % len;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out[cycle[i]] = cycle[(i + shift) % len];
    }
  }
  return out;
}

SpinConfig ChainModel::apply_update(const SpinConfig& state, long n,
                                    Direction dir) const {
  check_state(state);
  const auto map = powered_map(n, dir);
  SpinConfig out(spins());
  for (int p = 0; p < spins(); ++p) {
    if (state.up(p + 1)) out.set_up(map[p] + 1, true);
  }
  return out;
}

OrbitRecord ChainModel::orbit_of(const SpinConfig& state,
                                 bool with_states) const {
  check_state(state);
  SpinConfig rep = state;
  SpinConfig cur = state;
  long length = 0;
  do {
    cur = apply_update(cur);
    ++length;
    if (cur < rep) rep = cur;
  } while (!(cur == state));
  OrbitRecord record{rep, length, std::nullopt};
  if (with_states) {
    std::vector<SpinConfig> states;
    states.reserve(length);
    cur = rep;
    for (long i = 0; i < length; ++i) {
      states.push_back(cur);
      cur = apply_update(cur);
    }
    record.states = std::move(states);
  }
  return record;
}

std::vector<OrbitRecord> ChainModel::enumerate_orbits(int cap_spins) const {
  const int n = spins();
  if (n > cap_spins || n > 30) {
    throw std::invalid_argument(
        "orbit enumeration over 2^" + std::to_string(n) +
        " states exceeds the cap of 2S <= " +
        std::to_string(std::min(cap_spins, 30)));
  }
  const std::uint64_t total = 1ull << n;
  std::vector<bool> visited(total, false);
  const auto& fwd = perm_.forward;
  auto step_bits = [&](std::uint64_t b) {
    std::uint64_t out = 0;
    while (b != 0) {
      const int p = std::countr_zero(b);
      out |= 1ull << fwd[p];
      b &= b - 1;
    }
    return out;
  };
  std::vector<OrbitRecord> orbits;
  for (std::uint64_t b = 0; b < total; ++b) {
    if (visited[b]) continue;
    std::uint64_t cur = b;
    std::uint64_t rep = b;
    long length = 0;
    do {
      visited[cur] = true;
      if (lex_less_bits(cur, rep)) rep = cur;
      cur = step_bits(cur);
      ++length;
    } while (cur != b);
    orbits.push_back({SpinConfig::from_bits(rep, n), length, std::nullopt});
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              return a.representative < b.representative;
            });
  return orbits;
}

MoverView ChainModel::mover_decompose(const SpinConfig& state,
                                      long step) const {
  check_state(state);
  MoverView view;
  view.step = step;
  view.right.reserve(S_);
  view.left.reserve(S_);
  for (int k = 1; k <= S_; ++k) {
    view.right.push_back(state.spin(2 * k));
    view.left.push_back(state.spin(2 * k - 1));
  }
  return view;
}

SpinConfig interleave(const MoverView& view) {
  const int S = static_cast<int>(view.left.size());
  if (view.right.size() != view.left.size()) {
    throw std::invalid_argument("mover view has mismatched halves");
  }
  SpinConfig out(2 * S);
  for (int k = 1; k <= S; ++k) {
    out.set_up(2 * k - 1, view.left[k - 1] > 0);
    out.set_up(2 * k, view.right[k - 1] > 0);
  }
  return out;
}

bool mover_check(const MoverView& a, const MoverView& b) {
  if (a.right.size() != b.right.size() || a.left.size() != b.left.size()) {
    throw std::invalid_argument("mover views come from different chain sizes");
  }
  const int S = static_cast<int>(a.right.size());
  for (int i = 0; i < S; ++i) {
    if (b.right[i] != a.right[(i + S - 1) % S]) return false;
    if (b.left[i] != a.left[(i + 1) % S]) return false;
  }
  return true;
}

}  // namespace permdyn
