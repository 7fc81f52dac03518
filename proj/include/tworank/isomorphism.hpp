#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tworank/graph.hpp"

namespace tworank {

namespace detail {

// Per-vertex invariant: number of vertices at each distance (and unreachable).
inline std::vector<std::vector<int>> distance_profiles(const Graph& g) {
  std::vector<std::vector<int>> out(g.order());
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    auto dist = bfs_distances(g, v);
    std::vector<int> profile(g.order() + 1, 0);
    for (int d : dist) ++profile[d < 0 ? g.order() : static_cast<std::size_t>(d)];
    out[v] = std::move(profile);
  }
  return out;
}

// Backtracking search for adjacency-preserving bijections V(a) -> V(b).
// `visit` returns false to stop the enumeration.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  void run(const std::function<bool(const std::vector<Vertex>&)>& visit) {
    const std::size_t n = a_.order();
    if (n != b_.order() || a_.size() != b_.size()) return;
    profile_a_ = distance_profiles(a_);
    profile_b_ = distance_profiles(b_);
    {
      auto pa = profile_a_, pb = profile_b_;
      std::sort(pa.begin(), pa.end());
      std::sort(pb.begin(), pb.end());
      if (pa != pb) return;
    }
    adj_b_.assign(n * n, 0);
    for (auto [u, v] : b_.edges()) adj_b_[u * n + v] = adj_b_[v * n + u] = 1;

    // Visit order of a: BFS per component so each new vertex has mapped neighbors.
    order_.clear();
    std::vector<char> placed(n, 0);
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      if (placed[s]) continue;
      placed[s] = 1;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        Vertex u = order_[head++];
        for (Vertex w : a_.neighbors(u))
          if (!placed[w]) {
            placed[w] = 1;
            order_.push_back(w);
          }
      }
    }
    map_.assign(n, -1);
    used_.assign(n, 0);
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

 private:
  void extend(std::size_t depth) {
    const std::size_t n = a_.order();
    if (depth == n) {
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    Vertex u = order_[depth];
    for (Vertex cand = 0; cand < static_cast<Vertex>(n) && !stop_; ++cand) {
      if (used_[cand] || profile_a_[u] != profile_b_[cand]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex w = order_[i];
        ok = a_.adjacent(u, w) == static_cast<bool>(adj_b_[static_cast<std::size_t>(cand) * n + map_[w]]);
      }
      if (!ok) continue;
      map_[u] = cand;
      used_[cand] = 1;
      extend(depth + 1);
      used_[cand] = 0;
      map_[u] = -1;
    }
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::vector<int>> profile_a_, profile_b_;
  std::vector<char> adj_b_;
  std::vector<Vertex> order_, map_;
  std::vector<char> used_;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace detail

// Returns phi with u ~ v in a iff phi[u] ~ phi[v] in b. Exponential in the
// worst case; intended for the small graphs used in tests and enumeration.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  std::optional<std::vector<Vertex>> found;
  detail::IsomorphismSearch(a, b).run([&](const std::vector<Vertex>& map) {
    found = map;
    return false;
  });
  return found;
}

inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

// Every automorphism as a vertex permutation; stops early past `limit` (0 = no limit).
inline std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit = 0) {
  std::vector<std::vector<Vertex>> out;
  detail::IsomorphismSearch(g, g).run([&](const std::vector<Vertex>& map) {
    out.push_back(map);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

}  // namespace tworank
