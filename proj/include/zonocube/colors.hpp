#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "zonocube/common.hpp"

namespace zonocube {

// A subset of the colors [n] = {1,...,n}, packed as a bitmask (color c is bit
// c-1). Immutable value type. operator< is the lexicographic order on the
// sorted element sequences, so for 4-subsets of [5]:
//   1234 < 1235 < 1245 < 1345 < 2345.
class ColorSet {
public:
  constexpr ColorSet() = default;

  static ColorSet from_bits(uint64_t bits) { return ColorSet(bits); }

  static ColorSet of(std::initializer_list<int> colors) {
    ColorSet s;
    for (int c : colors) s = s.with(c);
    return s;
  }

  static ColorSet of(const std::vector<int>& colors) {
    ColorSet s;
    for (int c : colors) s = s.with(c);
    return s;
  }

  // The full set {1,...,n}.
  static ColorSet full(int n) {
    check_color_range(n);
    return ColorSet(n == 64 ? ~0ull : ((1ull << n) - 1));
  }

  bool contains(int c) const { return c >= 1 && c <= 64 && (bits_ >> (c - 1)) & 1; }

  ColorSet with(int c) const {
    check_color(c);
    return ColorSet(bits_ | (1ull << (c - 1)));
  }

  ColorSet without(int c) const {
    check_color(c);
    return ColorSet(bits_ & ~(1ull << (c - 1)));
  }

  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  uint64_t bits() const { return bits_; }

  int min() const { return empty() ? 0 : __builtin_ctzll(bits_) + 1; }
  int max() const { return empty() ? 0 : 64 - __builtin_clzll(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
    return out;
  }

  ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  ColorSet operator-(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }

  bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }

  // Count of elements strictly greater than c.
  int count_above(int c) const {
    check_color(c);
    return __builtin_popcountll(bits_ & ~((1ull << c) - 1));
  }

  bool operator==(ColorSet o) const { return bits_ == o.bits_; }
  bool operator!=(ColorSet o) const { return bits_ != o.bits_; }

  friend bool operator<(ColorSet a, ColorSet b) {
    if (a.bits_ == b.bits_) return false;
    uint64_t diff = a.bits_ ^ b.bits_;
    uint64_t low = diff & (~diff + 1);  // lowest differing element
    uint64_t above = ~(low | (low - 1));
    if (a.bits_ & low) return (b.bits_ & above) != 0;  // a has it: a wins unless b is a strict prefix
    return (a.bits_ & above) == 0;                     // b has it: a wins iff a is a strict prefix
  }

  // Compact rendering: "234" when all colors are single digits, else "{2,3,14}".
  std::string to_string() const;

private:
  explicit constexpr ColorSet(uint64_t bits) : bits_(bits) {}

  static void check_color(int c) {
    if (c < 1 || c > 64) throw InvalidInput("color " + std::to_string(c) + " out of range 1..64");
  }
  static void check_color_range(int n) {
    if (n < 0 || n > 64) throw InvalidInput("color count " + std::to_string(n) + " out of range 0..64");
  }

  uint64_t bits_ = 0;
};

// The color involution i -> n+1-i, extended elementwise to subsets. Applying
// it twice is the identity.
ColorSet involute(ColorSet x, int n);

// A packet G together with its (|G|-1)-subsets in lexicographic order.
struct Stick {
  ColorSet packet;
  std::vector<ColorSet> members;
};

// The (|G|-1)-subsets of G in lexicographic order (drop the largest element
// first). Requires |G| >= 2.
Stick stick_members(ColorSet g);

// All k-subsets of [n] in lexicographic order. Errors when k > n or k < 0.
std::vector<ColorSet> enumerate_packets(int n, int k);

uint64_t binomial(int n, int k);

// Lex-indexed family of all k-subsets of [n] with O(1) rank lookup.
class SubsetFamily {
public:
  SubsetFamily() = default;
  SubsetFamily(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<ColorSet>& sets() const { return sets_; }
  int size() const { return static_cast<int>(sets_.size()); }
  const ColorSet& operator[](int i) const { return sets_[i]; }

  // Lex rank of s, or -1 when s is not a k-subset of [n].
  int rank(ColorSet s) const {
    auto it = rank_.find(s.bits());
    return it == rank_.end() ? -1 : it->second;
  }

private:
  int n_ = 0, k_ = 0;
  std::vector<ColorSet> sets_;
  std::unordered_map<uint64_t, int> rank_;
};

}  // namespace zonocube
