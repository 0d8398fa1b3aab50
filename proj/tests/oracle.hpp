#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: plain adjacency sets, textbook BFS, explicit cycle search and
// an explicit-state minimax fixed point.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

struct Graph {
  int n = 0, k = 0;
  std::vector<std::set<int>> adj;

  int size() const { return static_cast<int>(adj.size()); }
};

inline Graph gp(int n, int k) {
  Graph g{n, k, std::vector<std::set<int>>(2 * n)};
  auto link = [&](int u, int v) {
    g.adj[u].insert(v);
    g.adj[v].insert(u);
  };
  for (int i = 0; i < n; ++i) {
    link(i, (i + 1) % n);
    link(i, n + i);
    link(n + i, n + (i + k) % n);
  }
  return g;
}

inline std::vector<int> bfs(const Graph& g, int source) {
  std::vector<int> dist(g.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// Shortest cycle found by depth-limited search for simple cycles through
/// each start vertex, visiting only larger vertices.
inline int girth_by_cycles(const Graph& g, int limit = 12) {
  int best = INT_MAX;
  std::vector<char> on_path(g.size(), 0);
  std::function<void(int, int, int)> dfs = [&](int start, int u, int len) {
    if (len >= best || len >= limit) return;
    for (int w : g.adj[u]) {
      if (w == start && len >= 2) best = std::min(best, len + 1);
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      dfs(start, w, len + 1);
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < g.size(); ++s) {
    on_path[s] = 1;
    dfs(s, s, 0);
    on_path[s] = 0;
  }
  return best;
}

/// Number of non-backtracking walks of length `depth` from root ending at
/// each vertex whose distance from root is exactly `depth`.
inline std::map<int, int> walk_multiplicity(const Graph& g, int root, int depth) {
  auto dist = bfs(g, root);
  std::map<int, int> count;
  std::function<void(int, int, int)> walk = [&](int u, int prev, int len) {
    if (len == depth) {
      if (dist[u] == depth) ++count[u];
      return;
    }
    for (int w : g.adj[u])
      if (w != prev) walk(w, u, len + 1);
  };
  walk(root, -1, 0);
  return count;
}

inline bool trapped(const Graph& g, const std::vector<int>& cops, int robber, bool cops_to_move) {
  auto near = [&](int c, int v) { return c == v || g.adj[v].count(c) > 0; };
  bool all = true;
  for (int v : g.adj[robber]) {
    bool covered = false;
    for (int c : cops) covered = covered || near(c, v);
    all = all && covered;
  }
  if (all) return true;
  if (cops_to_move)
    for (int c : cops)
      if (g.adj[robber].count(c)) return true;
  return false;
}

/// Explicit-state game: every sorted cop tuple, robber cell and side, with
/// the number of plies to capture under optimal play (-1: robber escapes).
struct Minimax {
  using Key = std::tuple<std::vector<int>, int, int>;  // cops, robber, side (0 cops, 1 robber)
  std::map<Key, int> distance;

  int at(const std::vector<int>& cops, int robber, int side) const {
    auto sorted = cops;
    std::sort(sorted.begin(), sorted.end());
    return distance.at({sorted, robber, side});
  }
  bool copwin(const std::vector<int>& cops, int robber, int side) const { return at(cops, robber, side) >= 0; }
};

inline std::vector<std::vector<int>> multisets(int universe, int c) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == c) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v < universe; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::vector<std::vector<int>> cop_successors(const Graph& g, const std::vector<int>& cops) {
  std::set<std::vector<int>> out;
  std::vector<int> cur(cops.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cops.size()) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      out.insert(s);
      return;
    }
    cur[i] = cops[i];
    rec(i + 1);
    for (int w : g.adj[cops[i]]) {
      cur[i] = w;
      rec(i + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

inline Minimax solve(const Graph& g, int c) {
  Minimax m;
  auto all = multisets(g.size(), c);
  auto captured = [](const std::vector<int>& cops, int r) { return std::find(cops.begin(), cops.end(), r) != cops.end(); };
  for (const auto& cops : all)
    for (int r = 0; r < g.size(); ++r)
      for (int side = 0; side < 2; ++side) m.distance[{cops, r, side}] = captured(cops, r) ? 0 : -1;
  std::map<std::vector<int>, std::vector<std::vector<int>>> succ;
  for (const auto& cops : all) succ[cops] = cop_successors(g, cops);

  // Jacobi rounds: a state is won at round t when its condition holds using
  // only values won before round t.
  for (int t = 1;; ++t) {
    std::vector<Minimax::Key> fresh;
    for (const auto& [key, d] : m.distance) {
      if (d >= 0) continue;
      const auto& [cops, r, side] = key;
      auto won_before = [&](const std::vector<int>& cs, int rr, int sd) {
        int x = m.distance.at({cs, rr, sd});
        return x >= 0 && x < t;
      };
      bool win;
      if (side == 0) {
        win = false;
        for (const auto& next : succ[cops]) win = win || won_before(next, r, 1);
      } else {
        win = won_before(cops, r, 0);
        for (int w : g.adj[r]) win = win && won_before(cops, w, 0);
      }
      if (win) fresh.push_back(key);
    }
    if (fresh.empty()) break;
    for (const auto& key : fresh) m.distance[key] = t;
  }
  return m;
}

/// Cops place first, then the robber.
inline bool cops_win_game(const Graph& g, const Minimax& m, int c) {
  for (const auto& cops : multisets(g.size(), c)) {
    bool every = true;
    for (int r = 0; r < g.size(); ++r) every = every && m.copwin(cops, r, 0);
    if (every) return true;
  }
  return false;
}

}  // namespace oracle
