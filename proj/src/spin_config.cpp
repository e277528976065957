#include "permdyn/spin_config.hpp"

#include <bit>
#include <stdexcept>

namespace permdyn {

namespace {

void check_length(int spins) {
  if (spins < 4 || spins % 2 != 0) {
    throw std::invalid_argument("spin chain length must be even and >= 4, got " +
                                std::to_string(spins));
  }
}

std::uint64_t tail_mask(int spins) {
  const int rem = spins % 64;
  return rem == 0 ? ~0ull : (1ull << rem) - 1;
}

}  // namespace

SpinConfig::SpinConfig(int spins) : spins_(spins) {
  check_length(spins);
  words_.assign((spins + 63) / 64, 0);
}

SpinConfig SpinConfig::all_down(int spins) { return SpinConfig(spins); }

SpinConfig SpinConfig::all_up(int spins) {
  SpinConfig s(spins);
  for (auto& w : s.words_) w = ~0ull;
  s.words_.back() &= tail_mask(spins);
  return s;
}

SpinConfig SpinConfig::from_string(std::string_view text) {
  SpinConfig s(static_cast<int>(text.size()));
  for (int p = 1; p <= s.spins_; ++p) {
    const char c = text[p - 1];
    if (c == 'u') {
      s.set_up(p, true);
    } else if (c != 'd') {
      throw std::invalid_argument("spin state must use only 'u'/'d', got '" +
                                  std::string(1, c) + "' at position " +
                                  std::to_string(p));
    }
  }
  return s;
}

SpinConfig SpinConfig::from_bits(std::uint64_t bits, int spins) {
  if (spins > 64) {
    throw std::invalid_argument("packed construction limited to 64 spins");
  }
  SpinConfig s(spins);
  s.words_[0] = bits & tail_mask(spins);
  return s;
}

void SpinConfig::check_pos(int pos) const {
  if (pos < 1 || pos > spins_) {
    throw std::out_of_range("position " + std::to_string(pos) +
                            " outside 1.." + std::to_string(spins_));
  }
}

bool SpinConfig::up(int pos) const {
  check_pos(pos);
  return (words_[(pos - 1) / 64] >> ((pos - 1) % 64)) & 1;
}

int SpinConfig::spin(int pos) const { return up(pos) ? 1 : -1; }

void SpinConfig::set_up(int pos, bool value) {
  check_pos(pos);
  const std::uint64_t bit = 1ull << ((pos - 1) % 64);
  if (value) {
    words_[(pos - 1) / 64] |= bit;
  } else {
    words_[(pos - 1) / 64] &= ~bit;
  }
}

std::uint64_t SpinConfig::bits() const {
  if (spins_ > 64) {
    throw std::logic_error("packed form limited to 64 spins");
  }
  return words_[0];
}

std::string SpinConfig::str() const {
  std::string out(spins_, 'd');
  for (int p = 1; p <= spins_; ++p) {
    if (up(p)) out[p - 1] = 'u';
  }
  return out;
}

bool SpinConfig::lex_less(const SpinConfig& other) const {
  if (spins_ != other.spins_) return spins_ < other.spins_;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      // lowest differing bit = first differing position; down (0) is smaller
      const int k = std::countr_zero(diff);
      return ((words_[w] >> k) & 1) == 0;
    }
  }
  return false;
}

std::pair<int, int> count_up_down(const SpinConfig& state) {
  int nu = 0;
  for (const auto w : state.words()) nu += std::popcount(w);
  return {nu, state.spins() - nu};
}

Fraction magnetization(const SpinConfig& state) {
  const auto [nu, nd] = count_up_down(state);
  return {nu - nd, state.spins()};
}

SpinConfig spin_flip(const SpinConfig& state) {
  SpinConfig out = state;
  for (int p = 1; p <= state.spins(); ++p) out.set_up(p, !state.up(p));
  return out;
}

SpinConfig translate(const SpinConfig& state, int shift) {
  const int n = state.spins();
  if (shift % 2 != 0) {
    throw std::invalid_argument(
        "translate: odd shift converts leftmovers and rightmovers into each "
        "other; shift must be even");
  }
  const int s = ((shift % n) + n) % n;
  SpinConfig out(n);
  for (int p = 1; p <= n; ++p) {
    const int q = (p - 1 + s) % n + 1;  // value at p is relabeled to p + shift
    out.set_up(q, state.up(p));
  }
  return out;
}

}  // namespace permdyn
