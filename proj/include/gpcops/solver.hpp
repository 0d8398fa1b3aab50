#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpcops/errors.hpp"
#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"
#include "gpcops/mask.hpp"
#include "gpcops/parallel.hpp"
#include "gpcops/state_space.hpp"

namespace gpcops {

struct SolveOptions {
  Symmetry symmetry = Symmetry::Dihedral;
  unsigned threads = 0;  ///< 0: hardware concurrency
  bool distances = true;
  std::uint64_t memory_budget = std::uint64_t{8} << 30;
};

struct SolveStats {
  std::uint64_t states = 0;  ///< full state space M(2n,c) * 2n * 2
  std::uint64_t stored_states = 0;
  std::uint64_t representatives = 0;
  std::uint64_t move_entries = 0;
  int sweeps = 0;
  double millis = 0;
  unsigned threads = 1;
};

/// Capture distance of a state the robber survives forever.
inline constexpr std::uint16_t kNoCapture = 0xffff;
/// Largest finite distance; longer games saturate here.
inline constexpr std::uint16_t kDistanceCap = 0xfffe;

/// Cop-win flags for every state of the c-cop game, stored per cop-multiset
/// representative as one robber-cell mask per side to move, plus optional
/// capture distances in plies under optimal play.
class WinTable {
 public:
  WinTable(std::shared_ptr<const StateSpace> space, std::vector<Mask> cop_win, std::vector<Mask> robber_win,
           std::vector<std::uint16_t> distance, SolveStats stats)
      : space_(std::move(space)),
        cop_win_(std::move(cop_win)),
        robber_win_(std::move(robber_win)),
        distance_(std::move(distance)),
        stats_(stats) {}

  int n() const { return space_->n(); }
  int k() const { return space_->k(); }
  int cops() const { return space_->cops(); }
  Symmetry symmetry() const { return space_->symmetry(); }
  const StateSpace& space() const { return *space_; }
  std::shared_ptr<const StateSpace> space_ptr() const { return space_; }
  const SolveStats& stats() const { return stats_; }
  bool has_distances() const { return !distance_.empty(); }

  Mask win_mask(std::size_t rep, Side side) const { return side == Side::Cops ? cop_win_[rep] : robber_win_[rep]; }
  const std::vector<Mask>& cop_masks() const { return cop_win_; }
  const std::vector<Mask>& robber_masks() const { return robber_win_; }
  const std::vector<std::uint16_t>& distances() const { return distance_; }

  bool copwin(const GameState& s) const {
    auto [rep, cell] = locate(s);
    return test(win_mask(rep, s.to_move), cell);
  }

  /// Plies to capture with optimal play; kNoCapture when the robber escapes.
  std::uint16_t capture_distance(const GameState& s) const {
    if (!has_distances()) throw ParamError("table was solved without capture distances");
    auto [rep, cell] = locate(s);
    return distance_[stored_index(rep, cell, s.to_move)];
  }

  /// Lexicographically least cop placement that wins against every robber
  /// placement, if one exists.
  std::optional<CopSet> winning_placement() const {
    const Mask full = low_bits(space_->cells());
    std::optional<CopSet> best;
    for (std::size_t r = 0; r < cop_win_.size(); ++r)
      if (cop_win_[r] == full && (!best || space_->rep(r) < *best)) best = space_->rep(r);
    return best;
  }

  bool cops_win() const { return winning_placement().has_value(); }

  /// FNV-1a over the win masks and distances.
  std::uint64_t checksum() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t word, int bytes) {
      for (int i = 0; i < bytes; ++i) {
        h ^= (word >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
      }
    };
    for (std::size_t r = 0; r < cop_win_.size(); ++r)
      for (Mask m : {cop_win_[r], robber_win_[r]}) {
        mix(static_cast<std::uint64_t>(m), 8);
        mix(static_cast<std::uint64_t>(m >> 64), 8);
      }
    for (std::uint16_t d : distance_) mix(d, 2);
    return h;
  }

  std::uint64_t stored_index(std::size_t rep, int cell, Side side) const {
    return (rep * static_cast<std::uint64_t>(space_->cells()) + cell) * 2 + static_cast<int>(side);
  }

 private:
  std::pair<std::size_t, int> locate(const GameState& s) const {
    if (s.cops.size() != space_->cops())
      throw ParamError("state has " + std::to_string(s.cops.size()) + " cops, table has " +
                       std::to_string(space_->cops()));
    auto loc = space_->locate(s.cops);
    return {loc.rep, space_->group().apply(loc.to_rep, s.robber)};
  }

  std::shared_ptr<const StateSpace> space_;
  std::vector<Mask> cop_win_, robber_win_;
  std::vector<std::uint16_t> distance_;
  SolveStats stats_;
};

namespace detail {

/// Cop moves of every representative: (successor representative, group
/// element carrying the representative's masks onto the successor's cells).
struct MoveGraph {
  std::vector<std::uint64_t> offset;
  std::vector<std::uint32_t> entry;  ///< rep << 8 | element

  static std::uint32_t pack(std::uint32_t rep, int e) { return rep << 8 | static_cast<std::uint32_t>(e); }
};

inline MoveGraph build_moves(const GPGraph& g, const StateSpace& space, unsigned threads) {
  const std::size_t reps = space.rep_count();
  const unsigned chunks = chunk_count(reps, threads);
  std::vector<std::vector<std::uint32_t>> part_entries(chunks);
  std::vector<std::vector<std::uint64_t>> part_sizes(chunks);
  parallel_chunks(reps, threads, [&](unsigned chunk, std::size_t begin, std::size_t end) {
    auto& entries = part_entries[chunk];
    auto& sizes = part_sizes[chunk];
    std::vector<std::uint32_t> local;
    for (std::size_t r = begin; r < end; ++r) {
      local.clear();
      for_each_cop_move(g, space.rep(r), [&](const CopSet& next) {
        auto loc = space.locate(next);
        local.push_back(MoveGraph::pack(loc.rep, space.group().inverse(loc.to_rep)));
      });
      std::sort(local.begin(), local.end());
      local.erase(std::unique(local.begin(), local.end()), local.end());
      entries.insert(entries.end(), local.begin(), local.end());
      sizes.push_back(local.size());
    }
  });
  MoveGraph moves;
  moves.offset.reserve(reps + 1);
  moves.offset.push_back(0);
  std::size_t total = 0;
  for (auto& e : part_entries) total += e.size();
  moves.entry.reserve(total);
  for (unsigned c = 0; c < chunks; ++c) {
    for (auto s : part_sizes[c]) moves.offset.push_back(moves.offset.back() + s);
    moves.entry.insert(moves.entry.end(), part_entries[c].begin(), part_entries[c].end());
    std::vector<std::uint32_t>().swap(part_entries[c]);
  }
  return moves;
}

inline std::uint16_t saturate(int ply) { return static_cast<std::uint16_t>(std::min(ply, int{kDistanceCap})); }

}  // namespace detail

/// Bytes solve() needs for c cops on GP(n,k), assuming the worst case of
/// 4^c distinct moves per representative.
inline std::uint64_t estimate_solve_bytes(const StateSpace& space, bool distances) {
  std::uint64_t reps = space.rep_count();
  std::uint64_t moves_per = 1;
  for (int i = 0; i < space.cops(); ++i) moves_per *= 4;
  std::uint64_t bytes = space.ranker().count() * 4 + reps * sizeof(CopSet);
  bytes += reps * (3 * sizeof(Mask) + moves_per * 4 + 8);
  if (distances) bytes += space.stored_states() * 2;
  return bytes;
}

/// Retrograde solution of the c-cop game on g.
///
/// Level sets are grown from the capture states one ply at a time: a
/// cops-to-move state is won at ply p if some cop move reaches a robber-to-move
/// state won by ply p-1; a robber-to-move state is won at ply p if every robber
/// move (passing included) reaches a cops-to-move state won by ply p-1 or steps
/// onto a cop. Each phase reads only the previous phase's masks, so the result
/// is identical for any thread count.
inline WinTable solve(const GPGraph& g, int c, const SolveOptions& options = {}) {
  auto started = std::chrono::steady_clock::now();
  if (c < 1 || c > kMaxCops) throw ParamError("cop count must be in [1, 4], got " + std::to_string(c));
  if (g.vertex_count() > kMaskBits) throw ParamError("solver supports 2n <= 128 vertices");
  {
    MultisetRanker probe(g.vertex_count(), c);
    if (probe.count() * (4 + sizeof(CopSet)) > options.memory_budget)
      throw BudgetError("state space of GP(" + std::to_string(g.n()) + "," + std::to_string(g.k()) + ") with " +
                        std::to_string(c) + " cops exceeds the memory budget");
  }
  auto space = std::make_shared<const StateSpace>(g, c, options.symmetry);
  if (estimate_solve_bytes(*space, options.distances) > options.memory_budget)
    throw BudgetError("solve of GP(" + std::to_string(g.n()) + "," + std::to_string(g.k()) + ") with " +
                      std::to_string(c) + " cops needs about " +
                      std::to_string(estimate_solve_bytes(*space, options.distances) >> 20) +
                      " MiB, over the memory budget");

  const unsigned threads = resolve_threads(options.threads);
  const std::size_t reps = space->rep_count();
  const int n = g.n();
  const int cells = g.vertex_count();
  const RingMasks rings(n, g.k());
  const Mask full = rings.full();
  const bool reflect = space->group().order() > 1;

  detail::MoveGraph moves = detail::build_moves(g, *space, threads);

  std::vector<Mask> occupied(reps);
  for (std::size_t r = 0; r < reps; ++r)
    for (VertexId v : space->rep(r)) occupied[r] |= bit(v);

  std::vector<Mask> cop_win = occupied, robber_win = occupied;
  std::vector<Mask> robber_win_negated;
  if (reflect) robber_win_negated.resize(reps);
  std::vector<std::uint16_t> distance;
  if (options.distances) {
    distance.assign(space->stored_states(), kNoCapture);
    for (std::size_t r = 0; r < reps; ++r)
      for_each_bit(occupied[r], [&](int v) {
        distance[(r * cells + v) * 2] = 0;
        distance[(r * cells + v) * 2 + 1] = 0;
      });
  }

  auto record = [&](std::size_t r, Mask fresh, Side side, int ply) {
    if (distance.empty()) return;
    for_each_bit(fresh, [&](int v) { distance[(r * cells + v) * 2 + static_cast<int>(side)] = detail::saturate(ply); });
  };

  std::vector<char> chunk_changed(chunk_count(reps, threads));
  auto any_changed = [&] {
    bool any = std::any_of(chunk_changed.begin(), chunk_changed.end(), [](char x) { return x != 0; });
    std::fill(chunk_changed.begin(), chunk_changed.end(), 0);
    return any;
  };

  int sweeps = 0;
  for (int ply = 1;; ply += 2) {
    ++sweeps;
    if (reflect)
      parallel_chunks(reps, threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) robber_win_negated[r] = rings.negate(robber_win[r]);
      });

    // Cops to move: some move reaches a won robber-to-move state.
    parallel_chunks(reps, threads, [&](unsigned chunk, std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) {
        Mask acc = cop_win[r];
        for (std::uint64_t i = moves.offset[r]; i < moves.offset[r + 1] && acc != full; ++i) {
          std::uint32_t e = moves.entry[i];
          std::uint32_t next = e >> 8;
          int element = static_cast<int>(e & 0xff);
          acc |= element < n ? rings.rotate(robber_win[next], element)
                             : rings.rotate(robber_win_negated[next], element - n);
        }
        Mask fresh = acc & ~cop_win[r];
        if (fresh) {
          cop_win[r] = acc;
          record(r, fresh, Side::Cops, ply);
          chunk_changed[chunk] = 1;
        }
      }
    });
    bool cops_changed = any_changed();

    // Robber to move: every move (or the robber's own cell) is lost.
    parallel_chunks(reps, threads, [&](unsigned chunk, std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) {
        Mask escape = full & ~(cop_win[r] | occupied[r]);
        Mask won = occupied[r] | (full & ~rings.dilate(escape));
        Mask fresh = won & ~robber_win[r];
        if (fresh) {
          robber_win[r] = won;
          record(r, fresh, Side::Robber, ply + 1);
          chunk_changed[chunk] = 1;
        }
      }
    });
    bool robber_changed = any_changed();
    if (!cops_changed && !robber_changed) break;
  }

  SolveStats stats;
  stats.states = StateIndex::space_size(space->ranker());
  stats.stored_states = space->stored_states();
  stats.representatives = reps;
  stats.move_entries = moves.entry.size();
  stats.sweeps = sweeps;
  stats.threads = threads;
  stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return WinTable(std::move(space), std::move(cop_win), std::move(robber_win), std::move(distance), stats);
}

/// Cops place first, then the robber; true iff some cop placement wins
/// against every robber placement.
inline bool cops_win_game(const GPGraph& g, int c, const SolveOptions& options = {}) {
  return solve(g, c, options).cops_win();
}

/// Least c <= max_c for which the cops win the placement game.
inline int cop_number(const GPGraph& g, int max_c = 4, const SolveOptions& options = {}) {
  if (max_c < 1 || max_c > kMaxCops) throw ParamError("max cops must be in [1, 4]");
  for (int c = 1; c <= max_c; ++c)
    if (cops_win_game(g, c, options)) return c;
  throw ExceedsMaxError("cops lose with " + std::to_string(max_c) + " cops on GP(" + std::to_string(g.n()) + "," +
                        std::to_string(g.k()) + ")");
}

/// Cop reply from a cops-to-move state: the move with the smallest capture
/// distance, ties to the lexicographically least multiset. Without stored
/// distances, the least move into a won state (or the least move).
inline CopSet optimal_cop_policy(const WinTable& t, const GPGraph& g, const GameState& s) {
  auto options = cop_moves(g, s);
  if (t.has_distances()) {
    const CopSet* best = &options.front();
    std::uint16_t best_d = kNoCapture;
    bool first = true;
    for (const auto& m : options) {
      std::uint16_t d = t.capture_distance({m, s.robber, Side::Robber});
      if (first || d < best_d) {
        best = &m;
        best_d = d;
        first = false;
      }
    }
    return *best;
  }
  for (const auto& m : options)
    if (t.copwin({m, s.robber, Side::Robber})) return m;
  return options.front();
}

/// Robber reply: from a state the robber wins, the lowest-id move to a state
/// it still wins; otherwise the move that delays capture longest, ties to the
/// lowest id.
inline VertexId optimal_robber_policy(const WinTable& t, const GPGraph& g, const GameState& s) {
  auto moves = robber_moves(g, s);
  std::sort(moves.begin(), moves.end());
  auto lost = [&](VertexId m) { return s.cops.contains(m) || t.copwin({s.cops, m, Side::Cops}); };
  if (!t.copwin(s)) {
    for (VertexId m : moves)
      if (!lost(m)) return m;
  }
  if (!t.has_distances()) {
    for (VertexId m : moves)
      if (!s.cops.contains(m)) return m;
    return moves.front();
  }
  VertexId best = moves.front();
  int best_d = -1;
  for (VertexId m : moves) {
    int d = s.cops.contains(m) ? 0 : t.capture_distance({s.cops, m, Side::Cops});
    if (d > best_d) {
      best = m;
      best_d = d;
    }
  }
  return best;
}

}  // namespace gpcops
