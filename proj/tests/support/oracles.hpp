#pragma once

// Reference implementations used only as test oracles. They share no code
// with the library paths they check beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tworank/graph.hpp"

namespace tworank::oracle {

// All-pairs shortest paths by Floyd-Warshall; -1 = unreachable.
inline std::vector<std::vector<int>> floyd_distances(const Graph& g) {
  const int n = static_cast<int>(g.order());
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Visits every simple path with at least 2 vertices and at most max_len edges,
// restricted to vertices where `allowed` is true. Each path is seen once per direction.
inline void for_each_simple_path(const Graph& g, int max_len, const std::vector<char>& allowed,
                                 const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> p;
  std::vector<char> on(g.order(), 0);
  std::function<void()> extend = [&] {
    if (p.size() >= 2) visit(p);
    if (static_cast<int>(p.size()) - 1 >= max_len) return;
    for (Vertex w : g.neighbors(p.back())) {
      if (on[w] || !allowed[w]) continue;
      on[w] = 1;
      p.push_back(w);
      extend();
      p.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    if (!allowed[s]) continue;
    on[s] = 1;
    p = {s};
    extend();
    on[s] = 0;
  }
}

// Definition check: endpoints distinct, or some interior vertex above both.
inline bool well_ranked(const std::vector<Vertex>& p, const std::vector<int>& rank) {
  const int a = rank[p.front()], b = rank[p.back()];
  if (a != b) return true;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (rank[p[i]] > a) return true;
  return false;
}

// True when every simple path of length 1..k among vertices with rank > 0 is well-ranked.
inline bool naive_is_k_ranking(const Graph& g, const std::vector<int>& rank, int k) {
  std::vector<char> allowed(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) allowed[v] = rank[v] > 0;
  bool ok = true;
  for_each_simple_path(g, k, allowed, [&](const std::vector<Vertex>& p) {
    if (ok && !well_ranked(p, rank)) ok = false;
  });
  return ok;
}

// Plain chronological backtracking in vertex-id order, re-checking every path
// among ranked vertices after each assignment. Returns chi_k.
inline int naive_chi_k(const Graph& g, int k) {
  const int n = static_cast<int>(g.order());
  if (n == 0) return 0;
  std::vector<int> rank(n, 0);
  std::function<bool(int, int)> place = [&](int v, int t) -> bool {
    if (v == n) return true;
    for (int r = 1; r <= t; ++r) {
      rank[v] = r;
      if (naive_is_k_ranking(g, rank, k) && place(v + 1, t)) return true;
    }
    rank[v] = 0;
    return false;
  };
  for (int t = 1;; ++t) {
    std::fill(rank.begin(), rank.end(), 0);
    if (place(0, t)) return t;
  }
}

// Star coloring check by brute force over all 4-vertex paths.
inline bool naive_is_star_coloring(const Graph& g, const std::vector<int>& color) {
  std::vector<char> allowed(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) allowed[v] = color[v] > 0;
  bool ok = true;
  for_each_simple_path(g, 3, allowed, [&](const std::vector<Vertex>& p) {
    if (!ok) return;
    if (p.size() == 2 && color[p[0]] == color[p[1]]) ok = false;
    if (p.size() == 4 && color[p[0]] == color[p[2]] && color[p[1]] == color[p[3]]) ok = false;
  });
  return ok;
}

inline int naive_star_chromatic(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n == 0) return 0;
  std::vector<int> color(n, 0);
  std::function<bool(int, int)> place = [&](int v, int t) -> bool {
    if (v == n) return true;
    for (int c = 1; c <= t; ++c) {
      color[v] = c;
      if (naive_is_star_coloring(g, color) && place(v + 1, t)) return true;
    }
    color[v] = 0;
    return false;
  };
  for (int t = 1;; ++t) {
    std::fill(color.begin(), color.end(), 0);
    if (place(0, t)) return t;
  }
}

// max over nonempty vertex subsets of the induced minimum degree.
inline int naive_degeneracy(const Graph& g) {
  const int n = static_cast<int>(g.order());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int min_deg = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += mask >> w & 1;
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

// Order-preserving compression of values to 0..(distinct-1).
inline std::vector<int> compress(std::vector<int> values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int& x : values) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  return values;
}

}  // namespace tworank::oracle
