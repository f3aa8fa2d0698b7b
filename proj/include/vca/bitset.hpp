// bitset.hpp — small fixed-capacity bitset used by the search engines.
//
// The local-search enumerator and the exact solver index links and vertices
// by small integers; both are limited to 256 of each (comfortably above
// desk scale, where n ≤ 16 gives at most n(n-3)/2 = 104 links). A fixed
// four-word bitset keeps the hot loops allocation-free.
#pragma once

#include <array>
#include <cstdint>

namespace vca {

struct Bits256 {
  std::array<std::uint64_t, 4> w{};

  static constexpr int capacity = 256;

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }
  void reset(int i) {
    w[static_cast<std::size_t>(i >> 6)] &= ~(1ULL << (i & 63));
  }
  bool test(int i) const {
    return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1ULL;
  }

  Bits256& operator|=(const Bits256& o) {
    for (int k = 0; k < 4; ++k) w[static_cast<std::size_t>(k)] |= o.w[static_cast<std::size_t>(k)];
    return *this;
  }
  Bits256& operator&=(const Bits256& o) {
    for (int k = 0; k < 4; ++k) w[static_cast<std::size_t>(k)] &= o.w[static_cast<std::size_t>(k)];
    return *this;
  }
  friend Bits256 operator|(Bits256 x, const Bits256& y) { return x |= y; }
  friend Bits256 operator&(Bits256 x, const Bits256& y) { return x &= y; }
  friend Bits256 operator~(Bits256 x) {
    for (auto& word : x.w) word = ~word;
    return x;
  }
  friend Bits256 andnot(Bits256 x, const Bits256& y) {
    for (int k = 0; k < 4; ++k) x.w[static_cast<std::size_t>(k)] &= ~y.w[static_cast<std::size_t>(k)];
    return x;
  }
  friend bool operator==(const Bits256&, const Bits256&) = default;

  bool any() const { return w[0] | w[1] | w[2] | w[3]; }
  bool intersects(const Bits256& o) const {
    for (int k = 0; k < 4; ++k)
      if (w[static_cast<std::size_t>(k)] & o.w[static_cast<std::size_t>(k)]) return true;
    return false;
  }
  int count() const {
    int total = 0;
    for (auto word : w) total += __builtin_popcountll(word);
    return total;
  }

  // Calls fn(i) for each set bit in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int k = 0; k < 4; ++k) {
      std::uint64_t word = w[static_cast<std::size_t>(k)];
      while (word) {
        const int bit = __builtin_ctzll(word);
        fn(k * 64 + bit);
        word &= word - 1;
      }
    }
  }

  // Mask with bits [0, count) set.
  static Bits256 prefix(int count) {
    Bits256 out;
    for (int k = 0; k < 4; ++k) {
      const int low = k * 64;
      if (count <= low) break;
      const int bits = count - low >= 64 ? 64 : count - low;
      out.w[static_cast<std::size_t>(k)] =
          bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
    }
    return out;
  }
};

}  // namespace vca
