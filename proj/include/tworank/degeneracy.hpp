#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "tworank/graph.hpp"

namespace tworank {

struct Degeneracy {
  int value = 0;
  // Smallest-last peeling order: each vertex has at most `value` neighbors after it.
  std::vector<Vertex> order;
};

// Repeatedly deletes a minimum-degree vertex, lowest id on ties.
inline Degeneracy degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  Degeneracy out;
  out.order.reserve(n);
  if (n == 0) return out;

  std::vector<int> deg(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    deg[v] = static_cast<int>(g.degree(v));
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  while (!queue.empty()) {
    auto [d, pick] = *queue.begin();
    queue.erase(queue.begin());
    out.value = std::max(out.value, d);
    removed[pick] = 1;
    out.order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return out;
}

// Greedy proper coloring (colors 0, 1, ...) visiting vertices in `order`.
inline std::vector<int> greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  std::vector<int> color(g.order(), -1);
  std::vector<char> taken;
  for (Vertex v : order) {
    taken.assign(g.degree(v) + 1, 0);
    for (Vertex w : g.neighbors(v))
      if (color[w] >= 0 && color[w] < static_cast<int>(taken.size())) taken[color[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

// Greedy coloring in reverse peeling order; uses at most degeneracy + 1 colors.
inline std::vector<int> smallest_last_coloring(const Graph& g) {
  auto order = degeneracy(g).order;
  std::reverse(order.begin(), order.end());
  return greedy_coloring(g, order);
}

}  // namespace tworank
