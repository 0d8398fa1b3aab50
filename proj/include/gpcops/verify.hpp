#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"
#include "gpcops/parallel.hpp"
#include "gpcops/state_space.hpp"
#include "gpcops/strategy.hpp"

namespace gpcops {

/// Which robber-to-move states a property check visits.
struct VerifyScope {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0x5eed;

  static VerifyScope Exhaustive() { return {}; }
  static VerifyScope Sample(std::uint64_t count, std::uint64_t seed = 0x5eed) { return {false, count, seed}; }
};

/// Stored violating states per report; the count is always exact.
inline constexpr std::size_t kMaxListedViolations = 64;

struct CaseCounts {
  std::uint64_t case1 = 0, case2 = 0, case3 = 0, trapped = 0;

  CaseCounts& operator+=(const CaseCounts& o) {
    case1 += o.case1;
    case2 += o.case2;
    case3 += o.case3;
    trapped += o.trapped;
    return *this;
  }
};

struct CaseCheckReport {
  int n = 0, k = 0;
  std::uint64_t states_checked = 0;
  std::uint64_t captured_skipped = 0;
  CaseCounts case_counts;
  /// States meeting the raw case-3 condition, split by how many of the
  /// robber's neighbours have a cop within distance 2 on their branches.
  std::array<std::uint64_t, 3> subcases{};  ///< A, B, C
  std::uint64_t violation_count = 0;
  std::vector<GameState> violations;
};

struct SafeMoveReport {
  int n = 0, k = 0;
  std::uint64_t states_checked = 0;
  std::uint64_t untrapped_states = 0;
  std::uint64_t replies_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<GameState> violations;
  std::vector<std::string> reasons;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Visits robber-to-move states of the 3-cop game in a fixed order: every
/// (multiset, robber) pair, or `samples` draws where draw i depends only on
/// (seed, i). fn(chunk, state).
template <typename Fn>
void for_each_robber_state(const GPGraph& g, const VerifyScope& scope, unsigned threads, Fn&& fn) {
  MultisetRanker ranker(g.vertex_count(), 3);
  const std::uint64_t cells = g.vertex_count();
  const std::uint64_t total = scope.exhaustive ? ranker.count() * cells : scope.samples;
  parallel_chunks(total, threads, [&](unsigned chunk, std::size_t begin, std::size_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      std::uint64_t index = i;
      if (!scope.exhaustive) {
        std::mt19937_64 rng(splitmix64(scope.seed ^ splitmix64(i)));
        index = std::uniform_int_distribution<std::uint64_t>(0, ranker.count() * cells - 1)(rng);
      }
      GameState s{ranker.unrank(index / cells), static_cast<VertexId>(index % cells), Side::Robber};
      fn(chunk, s);
    }
  });
}

template <typename Report>
void keep_violation(Report& r, const GameState& s) {
  ++r.violation_count;
  if (r.violations.size() < kMaxListedViolations) r.violations.push_back(s);
}

}  // namespace detail

/// Checks that every robber-to-move state meeting the case-3 condition is
/// trapped, over all 3-cop states (or a sample).
inline CaseCheckReport verify_lemma1(const GPGraph& g, const VerifyScope& scope = VerifyScope::Exhaustive(),
                                  unsigned threads = 1) {
  require_family(g);
  threads = resolve_threads(threads);
  MultisetRanker ranker(g.vertex_count(), 3);
  const std::uint64_t total = scope.exhaustive ? ranker.count() * g.vertex_count() : scope.samples;
  std::vector<CaseCheckReport> parts(chunk_count(total, threads));
  detail::for_each_robber_state(g, scope, threads, [&](unsigned chunk, const GameState& s) {
    auto& part = parts[chunk];
    if (is_capture(s)) {
      ++part.captured_skipped;
      return;
    }
    ++part.states_checked;
    CaseLabel label = classify(g, s);
    switch (label.kind) {
      case CaseKind::Case1: ++part.case_counts.case1; break;
      case CaseKind::Case2: ++part.case_counts.case2; break;
      case CaseKind::Case3: ++part.case_counts.case3; break;
      case CaseKind::Trapped: ++part.case_counts.trapped; break;
    }
    if (detail::all_far(g, s)) return;
    int close = 0;
    bool raw_case3 = true;
    for (VertexId v : g.neighbours(s.robber)) {
      if (detail::close_cop(g, s.cops, s.robber, v)) {
        ++close;
        continue;
      }
      auto gates = detail::others(g, v, s.robber);
      bool covered = detail::branch_has_cop(s.cops, make_branch(g, v, gates[0])) &&
                     detail::branch_has_cop(s.cops, make_branch(g, v, gates[1]));
      if (!covered) {
        raw_case3 = false;
        break;
      }
    }
    if (!raw_case3) return;
    ++part.subcases[close - 1];
    if (!is_trapped(g, s)) detail::keep_violation(part, s);
  });

  CaseCheckReport report;
  report.n = g.n();
  report.k = g.k();
  for (const auto& p : parts) {
    report.states_checked += p.states_checked;
    report.captured_skipped += p.captured_skipped;
    report.case_counts += p.case_counts;
    for (int i = 0; i < 3; ++i) report.subcases[i] += p.subcases[i];
    report.violation_count += p.violation_count;
    for (const auto& v : p.violations)
      if (report.violations.size() < kMaxListedViolations) report.violations.push_back(v);
  }
  return report;
}

/// Checks safe_move on every untrapped robber-to-move 3-cop state: the move is
/// legal, no cop is within distance 1 of it, and no cop reply captures or
/// traps the robber.
inline SafeMoveReport verify_lemma2(const GPGraph& g, const VerifyScope& scope = VerifyScope::Exhaustive(),
                                  unsigned threads = 1) {
  require_family(g);
  threads = resolve_threads(threads);
  MultisetRanker ranker(g.vertex_count(), 3);
  const std::uint64_t total = scope.exhaustive ? ranker.count() * g.vertex_count() : scope.samples;
  std::vector<SafeMoveReport> parts(chunk_count(total, threads));
  detail::for_each_robber_state(g, scope, threads, [&](unsigned chunk, const GameState& s) {
    auto& part = parts[chunk];
    if (is_capture(s)) return;
    ++part.states_checked;
    if (is_trapped(g, s)) return;
    ++part.untrapped_states;
    auto fail = [&](std::string why) {
      if (part.reasons.size() < kMaxListedViolations) part.reasons.push_back(format_state(g, s) + ": " + why);
      detail::keep_violation(part, s);
    };
    VertexId m;
    try {
      m = safe_move(g, s);
    } catch (const Error& e) {
      fail(e.what());
      return;
    }
    auto legal = robber_moves(g, s);
    if (std::find(legal.begin(), legal.end(), m) == legal.end()) return fail("illegal move to " + g.name(m));
    for (VertexId c : s.cops)
      if (g.within_one(c, m)) return fail("cop " + g.name(c) + " within distance 1 of " + g.name(m));
    bool ok = true;
    for_each_cop_move(g, s.cops, [&](const CopSet& next) {
      ++part.replies_checked;
      if (!ok) return;
      GameState after{next, m, Side::Robber};
      if (is_capture(after) || is_trapped(g, after)) {
        ok = false;
        fail("reply " + format_state(g, after) + " traps the robber");
      }
    });
  });

  SafeMoveReport report;
  report.n = g.n();
  report.k = g.k();
  for (const auto& p : parts) {
    report.states_checked += p.states_checked;
    report.untrapped_states += p.untrapped_states;
    report.replies_checked += p.replies_checked;
    report.violation_count += p.violation_count;
    for (const auto& v : p.violations)
      if (report.violations.size() < kMaxListedViolations) report.violations.push_back(v);
    for (const auto& r : p.reasons)
      if (report.reasons.size() < kMaxListedViolations) report.reasons.push_back(r);
  }
  return report;
}

struct SizeRange {
  std::size_t min = 0, max = 0;
  std::uint64_t configurations = 0;

  void add(std::size_t size) {
    if (configurations == 0 || size < min) min = size;
    if (configurations == 0 || size > max) max = size;
    ++configurations;
  }
};

struct CountsReport {
  int n = 0, k = 0;
  SizeRange adjacent;     ///< one cop on each neighbour of w
  SizeRange distance_two; ///< one cop adjacent to each neighbour of w, at distance 2 from w
  std::uint64_t placements_checked = 0;
  std::uint64_t placement_violations = 0;
  std::uint64_t placement_fallbacks = 0;  ///< placements where some cop reply traps every candidate
};

/// Trapped-set sizes of the two opening cop configurations around every
/// vertex, and initial_placement over every 3-cop placement.
inline CountsReport verify_counts(const GPGraph& g, unsigned threads = 1) {
  threads = resolve_threads(threads);
  CountsReport report;
  report.n = g.n();
  report.k = g.k();
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const auto& v = g.neighbours(w);
    report.adjacent.add(initial_trapped_set(g, {v[0], v[1], v[2]}).size());
    auto o0 = detail::others(g, v[0], w), o1 = detail::others(g, v[1], w), o2 = detail::others(g, v[2], w);
    for (int mask = 0; mask < 8; ++mask) {
      CopSet cops{o0[mask & 1], o1[(mask >> 1) & 1], o2[(mask >> 2) & 1]};
      report.distance_two.add(initial_trapped_set(g, cops).size());
    }
  }
  MultisetRanker ranker(g.vertex_count(), 3);
  struct Part {
    std::uint64_t checked = 0, violations = 0, fallbacks = 0;
  };
  std::vector<Part> parts(chunk_count(ranker.count(), threads));
  parallel_chunks(ranker.count(), threads, [&](unsigned chunk, std::size_t begin, std::size_t end) {
    for (std::uint64_t m = begin; m < end; ++m) {
      CopSet cops = ranker.unrank(m);
      VertexId w = initial_placement(g, cops);
      ++parts[chunk].checked;
      if (cops.contains(w) || is_trapped(g, {cops, w, Side::Cops})) ++parts[chunk].violations;
      if (!placement_survives_reply(g, cops, w)) ++parts[chunk].fallbacks;
    }
  });
  for (const auto& p : parts) {
    report.placements_checked += p.checked;
    report.placement_violations += p.violations;
    report.placement_fallbacks += p.fallbacks;
  }
  return report;
}

struct StructureReport {
  int n = 0, k = 0;
  int girth = 0;
  int roots_checked = 0;
  int roots_ok = 0;
  bool dotted_edges = false;  ///< b_{j+3k} ~ b_{j-3k} for every j
  std::vector<std::string> problems;

  bool ok() const { return girth == 7 && dotted_edges && roots_ok == roots_checked && problems.empty(); }
};

/// Depth-4 neighbourhood audit of every root against the family's expected
/// shape: layer sizes 1,3,6,12 then 24 (outer root) or 22 (inner root), no
/// repeated vertex above depth 4, exactly four vertices reached twice at
/// depth 4, and for inner roots the single same-depth edge b_{i+3k} b_{i-3k}.
inline StructureReport audit_structure(const GPGraph& g) {
  require_family(g);
  const int n = g.n(), k = g.k();
  StructureReport report;
  report.n = n;
  report.k = k;
  report.girth = girth(g);
  report.dotted_edges = true;
  for (int j = 0; j < n; ++j)
    if (!g.adjacent(g.id(inner(j + 3 * k)), g.id(inner(j - 3 * k)))) report.dotted_edges = false;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    ++report.roots_checked;
    const Vertex rv = g.vertex(root);
    const int i = rv.index;
    const bool outer_root = rv.ring == Ring::Outer;
    auto tree = neighbourhood_tree(g, root);
    std::vector<std::string> issues;
    const std::array<std::size_t, 5> expected_sizes{1, 3, 6, 12, outer_root ? 24u : 22u};
    for (int d = 0; d <= 4; ++d)
      if (tree.layers[d].size() != expected_sizes[d])
        issues.push_back("layer " + std::to_string(d) + " has " + std::to_string(tree.layers[d].size()) + " slots");
    for (int d = 1; d <= 3; ++d)
      if (!tree.coincidences_at(d).empty()) issues.push_back("repeated vertex at depth " + std::to_string(d));
    std::set<VertexId> expected;
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) expected.insert(g.id({rv.ring, i + s1 * k + s2}));
    std::set<VertexId> found;
    bool pairs = true;
    for (const auto& c : tree.coincidences_at(4)) {
      found.insert(c.vertex);
      if (c.slots.size() != 2) pairs = false;
    }
    if (!pairs || found != expected) issues.push_back("depth-4 coincidences differ from the expected four pairs");
    std::vector<std::pair<VertexId, VertexId>> upper_edges;
    auto dist = g.distances_from(root);
    for (auto e : tree.level_edges)
      if (dist[e.first] <= 3) upper_edges.push_back(e);
    if (outer_root) {
      if (!upper_edges.empty()) issues.push_back("unexpected same-depth edge");
    } else {
      VertexId p = g.id(inner(i + 3 * k)), q = g.id(inner(i - 3 * k));
      std::vector<std::pair<VertexId, VertexId>> want{{std::min(p, q), std::max(p, q)}};
      if (upper_edges != want || dist[p] != 3) issues.push_back("missing or extra same-depth edge b_{i+3k} b_{i-3k}");
    }
    if (issues.empty()) {
      ++report.roots_ok;
    } else {
      for (auto& s : issues) report.problems.push_back("root " + g.name(root) + ": " + s);
    }
  }
  return report;
}

// JSON forms used by the command-line reports.

inline nlohmann::json to_json(const GPGraph& g, const CaseCheckReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& s : r.violations) violations.push_back(format_state(g, s));
  return {{"states_checked", r.states_checked},
          {"captured_skipped", r.captured_skipped},
          {"case_counts",
           {{"case1", r.case_counts.case1},
            {"case2", r.case_counts.case2},
            {"case3", r.case_counts.case3},
            {"trapped", r.case_counts.trapped}}},
          {"subcase_counts", {{"A", r.subcases[0]}, {"B", r.subcases[1]}, {"C", r.subcases[2]}}},
          {"violation_count", r.violation_count},
          {"violations", violations}};
}

inline nlohmann::json to_json(const GPGraph&, const SafeMoveReport& r) {
  return {{"states_checked", r.states_checked},
          {"untrapped_states", r.untrapped_states},
          {"replies_checked", r.replies_checked},
          {"violation_count", r.violation_count},
          {"violations", r.reasons}};
}

inline nlohmann::json to_json(const SizeRange& r) {
  return {{"min", r.min}, {"max", r.max}, {"configurations", r.configurations}};
}

inline nlohmann::json to_json(const GPGraph&, const CountsReport& r) {
  return {{"adjacent", to_json(r.adjacent)},
          {"distance_two", to_json(r.distance_two)},
          {"placements_checked", r.placements_checked},
          {"placement_violations", r.placement_violations},
          {"placement_fallbacks", r.placement_fallbacks}};
}

inline nlohmann::json to_json(const GPGraph&, const StructureReport& r) {
  return {{"girth", r.girth},
          {"roots_checked", r.roots_checked},
          {"roots_ok", r.roots_ok},
          {"dotted_edges", r.dotted_edges},
          {"problems", r.problems}};
}

}  // namespace gpcops
