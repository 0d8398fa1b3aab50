#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "gpcops/errors.hpp"
#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"

namespace gpcops {

enum class CaseKind : std::uint8_t { Case1, Case2, Case3, Trapped };

inline std::string_view to_string(CaseKind k) {
  switch (k) {
    case CaseKind::Case1: return "case1";
    case CaseKind::Case2: return "case2";
    case CaseKind::Case3: return "case3";
    case CaseKind::Trapped: return "trapped";
  }
  return "?";
}

/// Classification of a robber-to-move state. Case1 carries its witness: the
/// anchor the robber can step to, the gate of the cop-free branch and the
/// gate of the other branch.
struct CaseLabel {
  CaseKind kind = CaseKind::Case3;
  VertexId anchor = -1;
  VertexId free_gate = -1;
  VertexId other_gate = -1;
};

namespace detail {

inline bool cop_on(const CopSet& cops, VertexId v) { return cops.contains(v); }

inline bool branch_has_cop(const CopSet& cops, const Branch& b) {
  return std::any_of(cops.begin(), cops.end(), [&](VertexId c) { return b.contains(c); });
}

/// Some cop on the anchor or a gate of v, i.e. on v's branches within
/// distance 2 of the robber.
inline bool close_cop(const GPGraph& g, const CopSet& cops, VertexId r, VertexId v) {
  if (cop_on(cops, v)) return true;
  for (VertexId gate : detail::others(g, v, r))
    if (cop_on(cops, gate)) return true;
  return false;
}

inline bool all_far(const GPGraph& g, const GameState& s) {
  auto dist = g.distances_from(s.robber);
  return std::all_of(s.cops.begin(), s.cops.end(), [&](VertexId c) { return dist[c] >= 3; });
}

inline std::optional<CaseLabel> case1_witness(const GPGraph& g, const GameState& s) {
  const VertexId r = s.robber;
  auto anchors = g.neighbours(r);
  std::sort(anchors.begin(), anchors.end());
  for (VertexId v : anchors) {
    if (cop_on(s.cops, v)) continue;
    auto gates = detail::others(g, v, r);
    std::sort(gates.begin(), gates.end());
    for (int i = 0; i < 2; ++i) {
      VertexId free_gate = gates[i], other_gate = gates[1 - i];
      if (cop_on(s.cops, other_gate)) continue;
      if (branch_has_cop(s.cops, make_branch(g, v, free_gate))) continue;
      return CaseLabel{CaseKind::Case1, v, free_gate, other_gate};
    }
  }
  return std::nullopt;
}

inline void require_robber_turn(const GameState& s, std::string_view what) {
  if (s.to_move != Side::Robber) throw TurnError(std::string(what) + " needs the robber to move");
}

}  // namespace detail

/// Precedence Trapped > Case2 > Case1 > Case3.
///
/// Case2: every cop at distance >= 3. Case1: some neighbour v has a branch
/// with no cop and no cop on v or the other branch's gate. Witnesses are
/// tried by ascending anchor id, then ascending free-gate id.
inline CaseLabel classify(const GPGraph& g, const GameState& s) {
  detail::require_robber_turn(s, "classify");
  require_family(g);
  if (is_trapped(g, s)) return {CaseKind::Trapped};
  if (detail::all_far(g, s)) return {CaseKind::Case2};
  if (auto w = detail::case1_witness(g, s)) return *w;
  return {CaseKind::Case3};
}

/// A robber move from a non-trapped state after which no cop reply traps or
/// captures the robber.
inline VertexId safe_move(const GPGraph& g, const GameState& s) {
  CaseLabel label = classify(g, s);
  switch (label.kind) {
    case CaseKind::Trapped:
      throw TrappedError("robber is trapped in " + format_state(g, s));
    case CaseKind::Case2:
      return g.neighbours(s.robber)[0];
    case CaseKind::Case1:
      return label.anchor;
    case CaseKind::Case3:
      break;
  }
  throw StrategyError("untrapped state classified as case 3: " + format_state(g, s));
}

/// Robber cells that are captured or trapped right after placement, with the
/// cops to move next.
inline std::vector<VertexId> initial_trapped_set(const GPGraph& g, const CopSet& cops) {
  std::vector<VertexId> out;
  for (VertexId w = 0; w < g.vertex_count(); ++w)
    if (cops.contains(w) || is_trapped(g, {cops, w, Side::Cops})) out.push_back(w);
  return out;
}

/// True when no reply of the cops captures or traps a robber placed on w.
inline bool placement_survives_reply(const GPGraph& g, const CopSet& cops, VertexId w) {
  bool ok = true;
  for_each_cop_move(g, cops, [&](const CopSet& next) {
    if (ok && (next.contains(w) || is_trapped(g, {next, w, Side::Robber}))) ok = false;
  });
  return ok;
}

/// Lowest-id robber start outside the trapped set whose every cop reply
/// leaves the robber untrapped; falls back to the lowest id outside the
/// trapped set.
inline VertexId initial_placement(const GPGraph& g, const CopSet& cops) {
  std::optional<VertexId> fallback;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (cops.contains(w) || is_trapped(g, {cops, w, Side::Cops})) continue;
    if (!fallback) fallback = w;
    if (placement_survives_reply(g, cops, w)) return w;
  }
  if (!fallback) throw StrategyError("every vertex is trapped");
  return *fallback;
}

}  // namespace gpcops
