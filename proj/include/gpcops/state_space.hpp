#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "gpcops/errors.hpp"
#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"

namespace gpcops {

/// Ranks sorted multisets of size c over [0, universe) in colex order via the
/// combinatorial number system: x_0 <= ... <= x_{c-1} maps to the
/// combination x_i + i, whose rank is sum_i C(x_i + i, i + 1).
class MultisetRanker {
 public:
  MultisetRanker(int universe, int c) : universe_(universe), c_(c) {
    if (c < 1 || c > kMaxCops) throw ParamError("cop count must be in [1, 4]");
    const int rows = universe + c + 1;
    binom_.assign(rows, std::array<std::uint64_t, kMaxCops + 2>{});
    for (int m = 0; m < rows; ++m) {
      binom_[m][0] = 1;
      for (int j = 1; j <= kMaxCops + 1; ++j)
        binom_[m][j] = m == 0 ? 0 : binom_[m - 1][j - 1] + binom_[m - 1][j];
    }
    count_ = binom_[universe + c - 1][c];
  }

  int universe() const { return universe_; }
  int size() const { return c_; }
  /// M(universe, c) = C(universe + c - 1, c).
  std::uint64_t count() const { return count_; }

  std::uint64_t rank(const CopSet& s) const {
    std::uint64_t r = 0;
    for (int i = 0; i < c_; ++i) r += binom_[s[i] + i][i + 1];
    return r;
  }

  CopSet unrank(std::uint64_t r) const {
    std::array<VertexId, kMaxCops> out{};
    int hi = universe_ + c_ - 1;
    for (int i = c_ - 1; i >= 0; --i) {
      int y = hi - 1;
      while (binom_[y][i + 1] > r) --y;
      r -= binom_[y][i + 1];
      out[i] = y - i;
      hi = y;
    }
    return CopSet(std::span<const VertexId>(out.data(), c_));
  }

 private:
  int universe_;
  int c_;
  std::uint64_t count_ = 0;
  std::vector<std::array<std::uint64_t, kMaxCops + 2>> binom_;
};

/// Dense rank of a full game state: ((multiset rank * 2n) + robber) * 2 + side.
struct StateIndex {
  std::uint64_t rank = 0;

  static std::uint64_t space_size(const MultisetRanker& ranker) {
    return ranker.count() * static_cast<std::uint64_t>(ranker.universe()) * 2;
  }
  static StateIndex of(const MultisetRanker& ranker, const GameState& s) {
    return {(ranker.rank(s.cops) * ranker.universe() + s.robber) * 2 + static_cast<int>(s.to_move)};
  }
  GameState state(const MultisetRanker& ranker) const {
    const std::uint64_t cells = ranker.universe();
    Side side = static_cast<Side>(rank & 1);
    auto robber = static_cast<VertexId>((rank >> 1) % cells);
    return {ranker.unrank((rank >> 1) / cells), robber, side};
  }
};

enum class Symmetry : std::uint8_t { None = 0, Dihedral = 1 };

/// Rotations j -> j+t and reflections j -> t-j of the index, applied to both
/// rings. Element e < n is the rotation by e; e >= n is the reflection with
/// offset e - n. The trivial group holds the identity only.
class DihedralGroup {
 public:
  DihedralGroup(int n, Symmetry symmetry) : n_(n), order_(symmetry == Symmetry::Dihedral ? 2 * n : 1) {}

  int n() const { return n_; }
  int order() const { return order_; }

  int apply_index(int e, int j) const { return e < n_ ? mod(j + e, n_) : mod(e - n_ - j, n_); }

  VertexId apply(int e, VertexId v) const {
    return v < n_ ? apply_index(e, v) : n_ + apply_index(e, v - n_);
  }

  CopSet apply(int e, const CopSet& s) const {
    std::array<VertexId, kMaxCops> out{};
    for (int i = 0; i < s.size(); ++i) out[i] = apply(e, s[i]);
    return CopSet(std::span<const VertexId>(out.data(), s.size()));
  }

  /// a after b.
  int compose(int a, int b) const {
    bool ra = a >= n_, rb = b >= n_;
    int ta = ra ? a - n_ : a, tb = rb ? b - n_ : b;
    if (!ra && !rb) return mod(ta + tb, n_);
    if (!ra && rb) return n_ + mod(ta + tb, n_);
    if (ra && !rb) return n_ + mod(ta - tb, n_);
    return mod(ta - tb, n_);
  }

  int inverse(int e) const { return e < n_ ? mod(-e, n_) : e; }

 private:
  int n_;
  int order_;
};

/// Lexicographically least image of s under the dihedral group: least sorted
/// cop multiset, then least robber among the maps achieving it.
inline GameState canonicalize(const GPGraph& g, const GameState& s) {
  DihedralGroup group(g.n(), Symmetry::Dihedral);
  GameState best = s;
  for (int e = 1; e < group.order(); ++e) {
    GameState image{group.apply(e, s.cops), group.apply(e, s.robber), s.to_move};
    if (std::tie(image.cops, image.robber) < std::tie(best.cops, best.robber)) best = image;
  }
  return best;
}

/// Cop multisets grouped into orbits. Every multiset rank maps to the index
/// of its orbit's representative (the lexicographically least member) and
/// the group element taking it there.
class StateSpace {
 public:
  StateSpace(const GPGraph& g, int c, Symmetry symmetry)
      : n_(g.n()), k_(g.k()), c_(c), symmetry_(symmetry), ranker_(2 * g.n(), c), group_(g.n(), symmetry) {
    const std::uint64_t total = ranker_.count();
    if (total >= (std::uint64_t{1} << 32)) throw BudgetError("too many cop multisets");
    orbit_.assign(total, kUnassigned);
    std::vector<std::pair<CopSet, int>> images;
    for (std::uint64_t m = 0; m < total; ++m) {
      if (orbit_[m] != kUnassigned) continue;
      CopSet base = ranker_.unrank(m);
      images.clear();
      int best = 0;
      for (int e = 0; e < group_.order(); ++e) {
        images.emplace_back(group_.apply(e, base), e);
        if (images.back().first < images[best].first) best = e;
      }
      const auto rep_index = static_cast<std::uint32_t>(reps_.size());
      reps_.push_back(images[best].first);
      for (const auto& [image, e] : images) {
        std::uint64_t r = ranker_.rank(image);
        if (orbit_[r] != kUnassigned) continue;
        // image = e.base and rep = best.base, so best.e^-1 takes image to rep.
        int to_rep = group_.compose(best, group_.inverse(e));
        orbit_[r] = pack(rep_index, to_rep);
      }
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int cops() const { return c_; }
  int cells() const { return 2 * n_; }
  Symmetry symmetry() const { return symmetry_; }
  const MultisetRanker& ranker() const { return ranker_; }
  const DihedralGroup& group() const { return group_; }

  std::size_t rep_count() const { return reps_.size(); }
  const CopSet& rep(std::size_t i) const { return reps_[i]; }

  struct Location {
    std::uint32_t rep;
    int to_rep;  ///< group element mapping the queried multiset onto the representative
  };

  Location locate(const CopSet& s) const {
    std::uint32_t packed = orbit_[ranker_.rank(s)];
    return {packed >> 8, static_cast<int>(packed & 0xff)};
  }

  /// Number of stored states: representatives x robber cells x sides.
  std::uint64_t stored_states() const { return reps_.size() * static_cast<std::uint64_t>(cells()) * 2; }

 private:
  static constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  static std::uint32_t pack(std::uint32_t rep, int e) { return rep << 8 | static_cast<std::uint32_t>(e); }

  int n_, k_, c_;
  Symmetry symmetry_;
  MultisetRanker ranker_;
  DihedralGroup group_;
  std::vector<CopSet> reps_;
  std::vector<std::uint32_t> orbit_;
};

}  // namespace gpcops
