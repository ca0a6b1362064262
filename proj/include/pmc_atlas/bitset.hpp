#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pmca {

/// Fixed-width vertex set over 64*Words bits. Plain value type; every
/// operation is a handful of word ops, which is what makes 2^n subset scans
/// affordable.
template <unsigned Words>
class Bitset {
  static_assert(Words >= 1 && Words <= 4, "unsupported width");

public:
  static constexpr int capacity() { return 64 * static_cast<int>(Words); }

  constexpr Bitset() = default;

  static Bitset from_word(std::uint64_t mask) {
    Bitset s;
    s.w_[0] = mask;
    return s;
  }

  static Bitset single(int v) {
    Bitset s;
    s.set(v);
    return s;
  }

  static Bitset of(std::initializer_list<int> vs) {
    Bitset s;
    for (int v : vs) s.set(v);
    return s;
  }

  /// The set {0, ..., n-1}.
  static Bitset first_n(int n) {
    assert(n >= 0 && n <= capacity());
    Bitset s;
    for (unsigned i = 0; i < Words; ++i) {
      int lo = 64 * static_cast<int>(i);
      if (n >= lo + 64) {
        s.w_[i] = ~0ULL;
      } else if (n > lo) {
        s.w_[i] = (~0ULL) >> (64 - (n - lo));
      }
    }
    return s;
  }

  bool test(int v) const {
    assert(v >= 0 && v < capacity());
    return (w_[word_of(v)] >> bit_of(v)) & 1ULL;
  }

  void set(int v) {
    assert(v >= 0 && v < capacity());
    w_[word_of(v)] |= 1ULL << bit_of(v);
  }

  void reset(int v) {
    assert(v >= 0 && v < capacity());
    w_[word_of(v)] &= ~(1ULL << bit_of(v));
  }

  bool empty() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (unsigned i = 0; i < Words; ++i)
      if (w_[i]) return 64 * static_cast<int>(i) + std::countr_zero(w_[i]);
    return -1;
  }

  bool contains(const Bitset& sub) const {
    for (unsigned i = 0; i < Words; ++i)
      if (sub.w_[i] & ~w_[i]) return false;
    return true;
  }

  bool is_subset_of(const Bitset& super) const { return super.contains(*this); }

  bool intersects(const Bitset& o) const {
    for (unsigned i = 0; i < Words; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (unsigned i = 0; i < Words; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (unsigned i = 0; i < Words; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (unsigned i = 0; i < Words; ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& o) {
    for (unsigned i = 0; i < Words; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  /// Complement relative to {0, ..., n-1}.
  Bitset complement_in(int n) const {
    Bitset r = first_n(n);
    r -= *this;
    return r;
  }

  bool operator==(const Bitset&) const = default;

  /// Order by the integer value of the bitmask (vertex 0 = least significant
  /// bit). This is the canonical enumeration order.
  bool mask_less(const Bitset& o) const {
    for (unsigned i = Words; i-- > 0;) {
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    }
    return false;
  }

  /// Visits members in ascending order.
  template <typename F>
  void for_each(F f) const {
    for (unsigned i = 0; i < Words; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int v = 64 * static_cast<int>(i) + std::countr_zero(w);
        f(v);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  std::uint64_t word(unsigned i) const { return w_[i]; }

private:
  static int word_of(int v) { return v >> 6; }
  static int bit_of(int v) { return v & 63; }

  std::array<std::uint64_t, Words> w_{};
};

/// Ascending-sequence lexicographic order ({0,2} before {0,3} before {1,...}).
/// Used for deterministic tie-breaking, not for enumeration order.
template <unsigned Words>
bool lex_vertices_less(const Bitset<Words>& a, const Bitset<Words>& b) {
  Bitset<Words> diff = a ^ b;
  if (diff.empty()) return false;
  int v = diff.first();
  if (a.test(v)) {
    // a owns the first differing vertex; a is smaller unless b already ended.
    Bitset<Words> tail = b - Bitset<Words>::first_n(v + 1);
    return !tail.empty();
  }
  Bitset<Words> tail = a - Bitset<Words>::first_n(v + 1);
  return tail.empty();
}

}  // namespace pmca
