#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tworank/errors.hpp"

namespace tworank {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxVertices = std::numeric_limits<Vertex>::max();

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built; optional per-vertex labels carry product coordinates.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, duplicate edges, or out-of-range ids.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {})
      : adjacency_(n), labels_(std::move(labels)) {
    if (n > kMaxVertices) throw SizeError("graph too large: " + std::to_string(n) + " vertices");
    if (!labels_.empty() && labels_.size() != n)
      throw InputError("label count " + std::to_string(labels_.size()) + " != vertex count " +
                       std::to_string(n));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for " + std::to_string(n) + " vertices");
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& nbrs = adjacency_[v];
      std::sort(nbrs.begin(), nbrs.end());
      if (auto dup = std::adjacent_find(nbrs.begin(), nbrs.end()); dup != nbrs.end())
        throw InputError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
    edge_count_ = edges.size();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
  }

  std::size_t min_degree() const {
    if (adjacency_.empty()) return 0;
    std::size_t best = adjacency_.front().size();
    for (const auto& nbrs : adjacency_) best = std::min(best, nbrs.size());
    return best;
  }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Named families

inline Graph hypercube(int d) {
  if (d < 0 || d > 30) throw SizeError("hypercube dimension must be in [0,30], got " + std::to_string(d));
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(d) * (std::size_t{1} << d) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (int bit = 0; bit < d; ++bit)
      if (Vertex v = u ^ (Vertex{1} << bit); u < v) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph complete(int n) {
  if (n < 1) throw ParameterError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph path(int n) {
  if (n < 1) throw ParameterError("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph empty_graph(int n) {
  if (n < 0) throw ParameterError("negative vertex count");
  return Graph(static_cast<std::size_t>(n), std::span<const Edge>{});
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    edges.emplace_back(i, i + 5);
    Vertex a = 5 + i, b = 5 + (i + 2) % 5;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(10, edges);
}

// 14-cycle with chords i -- i+5 for even i (LCF notation [5,-5]^7).
inline Graph heawood() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 14; ++i) {
    Vertex j = (i + 1) % 14;
    edges.emplace_back(std::min(i, j), std::max(i, j));
    if (i % 2 == 0) {
      Vertex c = (i + 5) % 14;
      edges.emplace_back(std::min(i, c), std::max(i, c));
    }
  }
  return Graph(14, edges);
}

// C8 plus the four chords joining vertices at distance 4 (the Wagner graph).
inline Graph wagner_c8_antipodal() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 8; ++i) edges.emplace_back(std::min(i, (i + 1) % 8), std::max(i, (i + 1) % 8));
  for (Vertex i = 0; i < 4; ++i) edges.emplace_back(i, i + 4);
  return Graph(8, edges);
}

// ---------------------------------------------------------------------------
// Products and powers

// Vertex (g, h) gets id g * |V(H)| + h and label "(label_G(g),label_H(h))".
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  if (ng == 0 || nh == 0) throw ParameterError("cartesian product of an empty graph");
  if (ng > kMaxVertices / nh) throw SizeError("cartesian product too large");
  const std::size_t n = ng * nh;
  auto id = [nh](Vertex a, Vertex b) { return static_cast<Vertex>(static_cast<std::size_t>(a) * nh + b); };

  std::vector<Edge> edges;
  edges.reserve(ng * h.size() + nh * g.size());
  for (Vertex a = 0; a < static_cast<Vertex>(ng); ++a)
    for (auto [b1, b2] : h.edges()) edges.emplace_back(id(a, b1), id(a, b2));
  for (auto [a1, a2] : g.edges())
    for (Vertex b = 0; b < static_cast<Vertex>(nh); ++b) edges.emplace_back(id(a1, b), id(a2, b));

  std::vector<std::string> labels;
  labels.reserve(n);
  for (Vertex a = 0; a < static_cast<Vertex>(ng); ++a)
    for (Vertex b = 0; b < static_cast<Vertex>(nh); ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  return Graph(n, edges, std::move(labels));
}

inline Graph complete_grid(int m, int n) { return cartesian_product(complete(m), complete(n)); }

// C_{m1} x C_{m2} x ... folded left to right, so the first factor is the
// most significant coordinate of the row-major id.
inline Graph cycle_product(std::span<const int> lengths) {
  if (lengths.empty()) throw ParameterError("cycle product needs at least one factor");
  Graph g = cycle(lengths[0]);
  for (std::size_t i = 1; i < lengths.size(); ++i) g = cartesian_product(g, cycle(lengths[i]));
  return g;
}

// Breadth-first distances from `source`; -1 marks unreachable vertices.
// Search stops expanding past `limit` when it is non-negative.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source, int limit = -1) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (limit >= 0 && dist[u] >= limit) continue;
    for (Vertex v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

// G^k: u ~ v iff 1 <= dist_G(u, v) <= k.
inline Graph distance_power(const Graph& g, int k) {
  if (k < 1) throw ParameterError("distance power needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u) {
    auto dist = bfs_distances(g, u, k);
    for (Vertex v = u + 1; v < static_cast<Vertex>(g.order()); ++v)
      if (dist[v] > 0) edges.emplace_back(u, v);
  }
  return Graph(g.order(), edges, g.labels());
}

// Subgraph induced by `keep` (in the given order); vertex i of the result is keep[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), index[w]);
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : keep) labels.push_back(g.label(v));
  return Graph(keep.size(), edges, std::move(labels));
}

// ---------------------------------------------------------------------------
// Structural queries

struct Components {
  std::vector<int> id;  // component index per vertex
  int count = 0;
};

inline Components connected_components(const Graph& g) {
  Components c;
  c.id.assign(g.order(), -1);
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    if (c.id[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    c.id[s] = c.count;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (c.id[v] < 0) {
          c.id[v] = c.count;
          stack.push_back(v);
        }
    }
    ++c.count;
  }
  return c;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Length of a shortest cycle, or nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> parent(g.order(), -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

// Largest finite distance; nullopt for the empty graph.
inline std::optional<int> diameter(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  int best = 0;
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s)
    for (int d : bfs_distances(g, s)) best = std::max(best, d);
  return best;
}

}  // namespace tworank
