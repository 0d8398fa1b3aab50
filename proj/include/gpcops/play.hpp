#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"
#include "gpcops/solver.hpp"
#include "gpcops/strategy.hpp"

namespace gpcops {

using CopMover = std::function<CopSet(const GPGraph&, const GameState&)>;

/// Each cop independently stays or steps to a uniformly chosen neighbour.
inline CopMover random_cops(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const GPGraph& g, const GameState& s) {
    std::array<VertexId, kMaxCops> next{};
    for (int i = 0; i < s.cops.size(); ++i) {
      int pick = std::uniform_int_distribution<int>(0, 3)(*rng);
      next[i] = pick == 0 ? s.cops[i] : g.neighbours(s.cops[i])[pick - 1];
    }
    return CopSet(std::span<const VertexId>(next.data(), s.cops.size()));
  };
}

/// Each cop steps to the closed neighbour nearest the robber, ties to the
/// lowest id.
inline CopMover greedy_cops() {
  return [](const GPGraph& g, const GameState& s) {
    auto dist = g.distances_from(s.robber);
    std::array<VertexId, kMaxCops> next{};
    for (int i = 0; i < s.cops.size(); ++i) {
      VertexId best = s.cops[i];
      for (VertexId w : g.neighbours(s.cops[i]))
        if (dist[w] < dist[best] || (dist[w] == dist[best] && w < best)) best = w;
      next[i] = best;
    }
    return CopSet(std::span<const VertexId>(next.data(), s.cops.size()));
  };
}

/// Table-driven cops: optimal_cop_policy on every turn.
inline CopMover optimal_cops(std::shared_ptr<const WinTable> table) {
  return [table](const GPGraph& g, const GameState& s) { return optimal_cop_policy(*table, g, s); };
}

/// Placement covering the most robber starts, ties to the lexicographically
/// least multiset.
inline CopSet strongest_placement(const WinTable& t) {
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t r = 0; r < t.space().rep_count(); ++r) {
    int count = popcount(t.win_mask(r, Side::Cops));
    if (count > best_count || (count == best_count && t.space().rep(r) < t.space().rep(best))) {
      best = r;
      best_count = count;
    }
  }
  return t.space().rep(best);
}

/// Robber start for the table-driven robber: the lowest cell it wins from,
/// else the one delaying capture longest.
inline VertexId optimal_robber_placement(const WinTable& t, const GPGraph& g, const CopSet& cops) {
  VertexId best = -1;
  int best_d = -1;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (cops.contains(w)) continue;
    GameState s{cops, w, Side::Cops};
    if (!t.copwin(s)) return w;
    int d = t.has_distances() ? t.capture_distance(s) : 0;
    if (d > best_d) {
      best = w;
      best_d = d;
    }
  }
  return best;
}

struct GameRecord {
  std::vector<GameState> states;  ///< robber-to-move states after each cop move
  int plies = 0;                  ///< moves played after placement
  bool captured = false;
  bool trapped = false;
};

/// Plays initial_placement + safe_move against `mover` for up to max_plies
/// plies, stopping early if the robber is ever captured or trapped.
inline GameRecord play_strategy_robber(const GPGraph& g, const CopSet& placement, const CopMover& mover,
                                    int max_plies) {
  GameRecord record;
  GameState s{placement, initial_placement(g, placement), Side::Cops};
  while (record.plies < max_plies) {
    s.cops = mover(g, s);
    s.to_move = Side::Robber;
    ++record.plies;
    record.states.push_back(s);
    if (is_capture(s)) {
      record.captured = true;
      break;
    }
    if (is_trapped(g, s)) {
      record.trapped = true;
      break;
    }
    if (record.plies >= max_plies) break;
    s.robber = safe_move(g, s);
    s.to_move = Side::Cops;
    ++record.plies;
    if (is_capture(s)) {
      record.captured = true;
      break;
    }
  }
  return record;
}

}  // namespace gpcops
