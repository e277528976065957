#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permdyn {

/// Classical configuration of a ring of 2S two-state spins.
///
/// Positions are numbered 1..2S. Internally spins are packed as bits with
/// position 1 in the lowest bit of the first word and up = 1, down = 0.
/// The text form is a string over {u, d} with position 1 leftmost.
class SpinConfig {
 public:
  /// All spins down; `spins` must be even and >= 4.
  explicit SpinConfig(int spins);

  static SpinConfig all_up(int spins);
  static SpinConfig all_down(int spins);
  static SpinConfig from_string(std::string_view text);
  /// Bit i of `bits` is position i+1; requires spins <= 64.
  static SpinConfig from_bits(std::uint64_t bits, int spins);

  int spins() const { return spins_; }
  bool up(int pos) const;
  /// +1 for up, -1 for down.
  int spin(int pos) const;
  void set_up(int pos, bool up);
  /// Packed form for spins <= 64 (bit i = position i+1).
  std::uint64_t bits() const;
  std::string str() const;

  /// Position-lexicographic order: the first differing position decides,
  /// down before up. Matches ordering of the text form.
  bool lex_less(const SpinConfig& other) const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;
  friend bool operator<(const SpinConfig& a, const SpinConfig& b) {
    return a.lex_less(b);
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  SpinConfig() = default;
  void check_pos(int pos) const;

  int spins_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Exact ratio of integers; magnetization values are multiples of 1/2S.
struct Fraction {
  int num = 0;
  int den = 1;
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// (N_u, N_d); always sums to the number of spins.
std::pair<int, int> count_up_down(const SpinConfig& state);

/// (N_u - N_d) / 2S as an exact fraction in [-1, 1].
Fraction magnetization(const SpinConfig& state);

/// Flips every spin. An involution that commutes with any exchange of
/// positions.
SpinConfig spin_flip(const SpinConfig& state);

/// Cyclic relabeling of positions by an even shift (mod 2S). Odd shifts are
/// rejected: they convert leftmovers and rightmovers into each other.
SpinConfig translate(const SpinConfig& state, int shift);

}  // namespace permdyn
