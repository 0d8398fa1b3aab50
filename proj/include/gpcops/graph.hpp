#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpcops/errors.hpp"

namespace gpcops {

/// Dense vertex id: outer a_i -> i, inner b_i -> n + i.
using VertexId = int;

enum class Ring : std::uint8_t { Outer, Inner };

inline constexpr int mod(int x, int n) {
  int r = x % n;
  return r < 0 ? r + n : r;
}

/// A vertex a_i (Outer) or b_i (Inner). The index is always kept reduced mod n.
struct Vertex {
  Ring ring = Ring::Outer;
  int index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline constexpr Vertex outer(int i) { return {Ring::Outer, i}; }
inline constexpr Vertex inner(int i) { return {Ring::Inner, i}; }

inline constexpr VertexId vertex_id(Vertex v, int n) {
  return v.ring == Ring::Outer ? mod(v.index, n) : n + mod(v.index, n);
}

inline constexpr Vertex vertex_of(VertexId id, int n) {
  return id < n ? Vertex{Ring::Outer, id} : Vertex{Ring::Inner, id - n};
}

/// Rotation by t positions; an automorphism of every GP(n,k).
inline constexpr Vertex rotate(Vertex v, int t, int n) { return {v.ring, mod(v.index + t, n)}; }

/// Index negation; an automorphism of every GP(n,k).
inline constexpr Vertex reflect(Vertex v, int n) { return {v.ring, mod(-v.index, n)}; }

inline std::string vertex_name(Vertex v) {
  return (v.ring == Ring::Outer ? "a" : "b") + std::to_string(v.index);
}

/// Parses "a<i>" or "b<i>" with 0 <= i < n.
inline Vertex parse_vertex(std::string_view text, int n) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b'))
    throw FormatError("bad vertex '" + std::string(text) + "': expected a<i> or b<i>");
  long value = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9')
      throw FormatError("bad vertex '" + std::string(text) + "': index is not a number");
    value = value * 10 + (ch - '0');
    if (value >= n) break;
  }
  if (value >= n)
    throw FormatError("bad vertex '" + std::string(text) + "': index out of range for n=" +
                      std::to_string(n));
  return {text[0] == 'a' ? Ring::Outer : Ring::Inner, static_cast<int>(value)};
}

/// The generalised Petersen graph GP(n,k). Immutable after construction.
///
/// Neighbour order is fixed: a_i -> (a_{i+1}, a_{i-1}, b_i) and
/// b_i -> (b_{i+k}, b_{i-k}, a_i). Distances are computed per source on first
/// use; the cache is shared between copies and safe for concurrent readers.
class GPGraph {
 public:
  GPGraph(int n, int k) : n_(n), k_(k) {
    if (n < 5) throw ParamError("GP(n,k) needs n >= 5, got n=" + std::to_string(n));
    if (k < 1 || 2 * k >= n)
      throw ParamError("GP(n,k) needs 1 <= k < n/2, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
    adjacency_.resize(2 * n);
    for (int i = 0; i < n; ++i) {
      adjacency_[i] = {mod(i + 1, n), mod(i - 1, n), n + i};
      adjacency_[n + i] = {n + mod(i + k, n), n + mod(i - k, n), i};
    }
    cache_ = std::make_shared<DistanceCache>(2 * n);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int vertex_count() const { return 2 * n_; }
  int edge_count() const { return 3 * n_; }

  VertexId id(Vertex v) const { return vertex_id(v, n_); }
  Vertex vertex(VertexId id) const { return vertex_of(id, n_); }
  std::string name(VertexId id) const { return vertex_name(vertex(id)); }
  VertexId parse(std::string_view text) const { return id(parse_vertex(text, n_)); }

  const std::array<VertexId, 3>& neighbours(VertexId v) const { return adjacency_[v]; }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& a = adjacency_[u];
    return a[0] == v || a[1] == v || a[2] == v;
  }

  /// u == v or u ~ v.
  bool within_one(VertexId u, VertexId v) const { return u == v || adjacent(u, v); }

  /// Edges as (min id, max id), sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (VertexId v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::span<const std::uint16_t> distances_from(VertexId source) const {
    std::call_once(cache_->flags[source], [&] { cache_->rows[source] = bfs(source); });
    return cache_->rows[source];
  }

  int distance(VertexId u, VertexId v) const { return distances_from(u)[v]; }

 private:
  struct DistanceCache {
    explicit DistanceCache(int size)
        : rows(size), flags(std::make_unique<std::once_flag[]>(size)) {}
    std::vector<std::vector<std::uint16_t>> rows;
    std::unique_ptr<std::once_flag[]> flags;
  };

  std::vector<std::uint16_t> bfs(VertexId source) const {
    constexpr auto unseen = std::numeric_limits<std::uint16_t>::max();
    std::vector<std::uint16_t> dist(vertex_count(), unseen);
    std::vector<VertexId> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (VertexId w : adjacency_[u]) {
        if (dist[w] != unseen) continue;
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
    return dist;
  }

  int n_;
  int k_;
  std::vector<std::array<VertexId, 3>> adjacency_;
  std::shared_ptr<DistanceCache> cache_;
};

inline GPGraph make_graph(int n, int k) { return GPGraph(n, k); }

/// Length of the shortest cycle, found by BFS from every root.
inline int girth(const GPGraph& g) {
  const int size = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(size), parent(size);
  for (VertexId root = 0; root < size; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<VertexId> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (VertexId w : g.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

enum class Girth7Condition : std::uint8_t { SevenKOverI, KEqualsFour, TwoKPlusThree, ThreeKPlusMinusTwo };

inline std::string_view to_string(Girth7Condition c) {
  switch (c) {
    case Girth7Condition::SevenKOverI: return "SevenKOverI";
    case Girth7Condition::KEqualsFour: return "KEqualsFour";
    case Girth7Condition::TwoKPlusThree: return "TwoKPlusThree";
    case Girth7Condition::ThreeKPlusMinusTwo: return "ThreeKPlusMinusTwo";
  }
  return "?";
}

/// Which arithmetic girth-7 conditions (n,k) satisfies. Reported only; the
/// actual girth must come from girth().
inline std::vector<Girth7Condition> girth7_conditions(int n, int k) {
  std::vector<Girth7Condition> tags;
  for (int i = 1; i <= 3; ++i)
    if (i * n == 7 * k) {
      tags.push_back(Girth7Condition::SevenKOverI);
      break;
    }
  if (k == 4) tags.push_back(Girth7Condition::KEqualsFour);
  if (n == 2 * k + 3) tags.push_back(Girth7Condition::TwoKPlusThree);
  if (n == 3 * k + 2 || n == 3 * k - 2) tags.push_back(Girth7Condition::ThreeKPlusMinusTwo);
  return tags;
}

struct FamilyParams {
  int n = 0;
  int k = 0;
  int divisor = 0;  ///< i with i*n == 7k
  bool exception = false;  ///< one of the three small members with n < 42
};

inline bool is_small_exception(int n, int k) {
  return (n == 28 && k == 8) || (n == 35 && k == 10) || (n == 35 && k == 15);
}

/// Members of the n = 7k/i family with cop number 4: n >= 42 or one of the
/// three small exceptions.
inline std::optional<FamilyParams> family_membership(int n, int k) {
  for (int i = 1; i <= 3; ++i) {
    if (i * n != 7 * k) continue;
    bool exception = is_small_exception(n, k);
    if (n >= 42 || exception) return FamilyParams{n, k, i, exception};
    return std::nullopt;
  }
  return std::nullopt;
}

inline bool in_family(const GPGraph& g) { return family_membership(g.n(), g.k()).has_value(); }

inline void require_family(const GPGraph& g) {
  if (!in_family(g))
    throw FamilyError("GP(" + std::to_string(g.n()) + "," + std::to_string(g.k()) +
                      ") is not in the n=7k/i family");
}

struct TreeSlot {
  VertexId vertex;
  int parent;  ///< slot index in the previous layer, -1 for the root
};

/// A vertex reached through more than one slot of the same layer.
struct Coincidence {
  int depth;
  VertexId vertex;
  std::vector<int> slots;
};

/// Layered BFS tree. A slot is a (vertex, parent slot) pair with the vertex at
/// exact distance `depth` from the root, so edges between two vertices of the
/// same layer are not slots; they are listed in `level_edges`.
struct NeighbourhoodTree {
  VertexId root = 0;
  std::vector<std::vector<TreeSlot>> layers;
  std::vector<Coincidence> coincidences;
  std::vector<std::pair<VertexId, VertexId>> level_edges;

  std::vector<Coincidence> coincidences_at(int depth) const {
    std::vector<Coincidence> out;
    for (const auto& c : coincidences)
      if (c.depth == depth) out.push_back(c);
    return out;
  }
};

inline NeighbourhoodTree layered_tree(const GPGraph& g, VertexId root, int depth) {
  auto dist = g.distances_from(root);
  NeighbourhoodTree tree;
  tree.root = root;
  tree.layers.push_back({{root, -1}});
  for (int d = 1; d <= depth; ++d) {
    const auto& prev = tree.layers.back();
    std::vector<TreeSlot> layer;
    for (int s = 0; s < static_cast<int>(prev.size()); ++s)
      for (VertexId w : g.neighbours(prev[s].vertex))
        if (dist[w] == d) layer.push_back({w, s});
    tree.layers.push_back(std::move(layer));
  }
  for (int d = 1; d <= depth; ++d) {
    std::map<VertexId, std::vector<int>> seen;
    const auto& layer = tree.layers[d];
    for (int s = 0; s < static_cast<int>(layer.size()); ++s) seen[layer[s].vertex].push_back(s);
    for (auto& [v, slots] : seen)
      if (slots.size() > 1) tree.coincidences.push_back({d, v, std::move(slots)});
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId w : g.neighbours(u))
      if (u < w && dist[u] == dist[w] && dist[u] <= depth) tree.level_edges.emplace_back(u, w);
  std::sort(tree.level_edges.begin(), tree.level_edges.end());
  return tree;
}

/// Distance-4 neighbourhood of v in a family graph.
inline NeighbourhoodTree neighbourhood_tree(const GPGraph& g, VertexId v) {
  require_family(g);
  return layered_tree(g, v, 4);
}

}  // namespace gpcops
