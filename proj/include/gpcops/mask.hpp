#pragma once

#include <bit>
#include <cstdint>

#include "gpcops/graph.hpp"

namespace gpcops {

/// Set of robber cells of a graph with 2n <= 128 vertices; bit v is vertex id v.
__extension__ typedef unsigned __int128 Mask;

inline constexpr int kMaskBits = 128;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline constexpr bool test(Mask m, int v) { return (m >> v) & 1; }
inline constexpr Mask low_bits(int count) { return count >= kMaskBits ? ~Mask{0} : (Mask{1} << count) - 1; }

inline int popcount(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  auto lo = static_cast<std::uint64_t>(m);
  auto hi = static_cast<std::uint64_t>(m >> 64);
  while (lo) {
    fn(std::countr_zero(lo));
    lo &= lo - 1;
  }
  while (hi) {
    fn(64 + std::countr_zero(hi));
    hi &= hi - 1;
  }
}

/// Ring-aware shifts of a cell mask: outer cells occupy bits [0, n), inner
/// cells bits [n, 2n).
class RingMasks {
 public:
  RingMasks(int n, int k) : n_(n), k_(k), ring_(low_bits(n)), full_(low_bits(2 * n)) {}

  Mask full() const { return full_; }

  /// Bit j -> bit j + t (mod n), each ring separately.
  Mask rotate(Mask m, int t) const {
    t = mod(t, n_);
    if (t == 0) return m;
    return rotate_field(m & ring_, t) | (rotate_field((m >> n_) & ring_, t) << n_);
  }

  /// Bit j -> bit -j (mod n), each ring separately.
  Mask negate(Mask m) const {
    Mask out = 0;
    for_each_bit(m, [&](int v) {
      out |= v < n_ ? bit(mod(-v, n_)) : bit(n_ + mod(-(v - n_), n_));
    });
    return out;
  }

  /// Closed neighbourhood union: cells with some closed neighbour in m.
  Mask dilate(Mask m) const {
    Mask o = m & ring_, i = (m >> n_) & ring_;
    Mask no = o | rotate_field(o, 1) | rotate_field(o, n_ - 1) | i;
    Mask ni = i | rotate_field(i, k_) | rotate_field(i, n_ - k_) | o;
    return no | (ni << n_);
  }

 private:
  Mask rotate_field(Mask f, int t) const { return ((f << t) | (f >> (n_ - t))) & ring_; }

  int n_, k_;
  Mask ring_, full_;
};

}  // namespace gpcops
