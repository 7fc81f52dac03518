#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tworank/errors.hpp"
#include "tworank/graph.hpp"
#include "tworank/graph_io.hpp"

namespace tworank {

// Path-length cap meaning "all paths" (the ranking number chi_infinity).
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// Total map vertex -> rank, ranks >= 1.
class Ranking {
 public:
  Ranking() = default;

  explicit Ranking(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    for (std::size_t v = 0; v < ranks_.size(); ++v)
      if (ranks_[v] < 1)
        throw InputError("rank of vertex " + std::to_string(v) + " is " + std::to_string(ranks_[v]) +
                         "; ranks must be >= 1");
  }

  // Constructions work with ranks 0..t-1; shift them to 1..t.
  static Ranking from_zero_based(std::span<const int> ranks) {
    std::vector<int> shifted(ranks.begin(), ranks.end());
    for (int& r : shifted) ++r;
    return Ranking(std::move(shifted));
  }

  std::size_t size() const noexcept { return ranks_.size(); }
  int operator[](Vertex v) const { return ranks_[v]; }
  std::span<const int> ranks() const noexcept { return ranks_; }

  std::size_t rank_count() const {
    std::vector<int> sorted = ranks_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  int max_rank() const { return ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end()); }

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<int> ranks_;
};

// A path whose endpoints share a rank and whose interior has nothing higher.
struct Violation {
  std::vector<Vertex> path;
};

// Failure of a star coloring: an improper edge, or a path on 4 vertices with 2 colors.
struct StarViolation {
  enum class Kind { improper_edge, bicolored_p4 };
  Kind kind;
  std::vector<Vertex> path;
};

namespace detail {

inline void require_total(const Graph& g, const Ranking& r) {
  if (r.size() != g.order())
    throw InputError("ranking covers " + std::to_string(r.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
}

// Depth-first extension of a path from `path.front()` through interior vertices
// ranked <= the start rank, looking for an endpoint of length exactly `target`
// with the same rank and a larger id than the start.
inline bool find_violation_from(const Graph& g, const Ranking& r, std::vector<Vertex>& path,
                                std::vector<char>& on_path, int target) {
  const Vertex start = path.front(), last = path.back();
  const int depth = static_cast<int>(path.size()) - 1;
  for (Vertex next : g.neighbors(last)) {
    if (on_path[next]) continue;
    if (depth + 1 == target) {
      if (next > start && r[next] == r[start]) {
        path.push_back(next);
        return true;
      }
      continue;
    }
    if (r[next] > r[start]) continue;  // a higher interior vertex makes every extension well-ranked
    on_path[next] = 1;
    path.push_back(next);
    if (find_violation_from(g, r, path, on_path, target)) return true;
    path.pop_back();
    on_path[next] = 0;
  }
  return false;
}

}  // namespace detail

// Checks every path of length 1..k. Returns the shortest violating path, the
// lowest one lexicographically among equals, or nullopt when r is a k-ranking.
// k <= 2 runs in O(sum deg^2); larger k enumerates simple paths and is exponential.
inline std::optional<Violation> verify_k_ranking(const Graph& g, const Ranking& r, int k) {
  if (k < 1) throw InputError("path length bound k must be >= 1");
  detail::require_total(g, r);

  for (auto [u, v] : g.edges())
    if (r[u] == r[v]) return Violation{{u, v}};
  if (k == 1) return std::nullopt;

  // Length 2: middle vertex w, unordered neighbor pairs {u, v}.
  std::optional<Violation> best;
  for (Vertex w = 0; w < static_cast<Vertex>(g.order()); ++w) {
    auto nbrs = g.neighbors(w);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (r[nbrs[i]] == r[nbrs[j]] && r[w] <= r[nbrs[i]]) {
          Violation cand{{nbrs[i], w, nbrs[j]}};
          if (!best || cand.path < best->path) best = cand;
        }
  }
  if (best || k == 2) return best;

  const int cap = std::min<long long>(k, static_cast<long long>(g.order()) - 1);
  std::vector<char> on_path(g.order(), 0);
  for (int len = 3; len <= cap; ++len) {
    for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
      std::vector<Vertex> p{s};
      on_path[s] = 1;
      bool found = detail::find_violation_from(g, r, p, on_path, len);
      std::fill(on_path.begin(), on_path.end(), 0);
      if (found) return Violation{std::move(p)};
    }
  }
  return std::nullopt;
}

inline bool is_k_ranking(const Graph& g, const Ranking& r, int k) { return !verify_k_ranking(g, r, k); }

// Proper coloring with no 2-colored path on 4 vertices.
inline std::optional<StarViolation> verify_star_coloring(const Graph& g, const Ranking& c) {
  detail::require_total(g, c);
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return StarViolation{StarViolation::Kind::improper_edge, {u, v}};
  // Enumerate P4 a-b-x-y by its middle edge (b, x), both orientations.
  for (auto [u, v] : g.edges()) {
    for (auto [b, x] : {Edge{u, v}, Edge{v, u}}) {
      for (Vertex a : g.neighbors(b)) {
        if (a == x || c[a] != c[x]) continue;
        for (Vertex y : g.neighbors(x))
          if (y != b && y != a && c[y] == c[b])
            return StarViolation{StarViolation::Kind::bicolored_p4, {a, b, x, y}};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matrix view of K_m x K_n rankings: entry (i, j) ranks vertex (u_i, v_j).

class RankMatrix {
 public:
  RankMatrix() = default;

  RankMatrix(std::size_t rows, std::size_t cols, std::vector<int> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw InputError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                       std::to_string(rows_ * cols_));
  }

  RankMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw InputError("ragged matrix rows");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static RankMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<int> entries;
    for (const auto& row : rows) {
      if (row.size() != cols) throw InputError("ragged matrix rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return RankMatrix(rows.size(), cols, std::move(entries));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const int> entries() const noexcept { return entries_; }

  std::size_t rank_count() const {
    std::set<int> distinct(entries_.begin(), entries_.end());
    return distinct.size();
  }
  int min_entry() const { return entries_.empty() ? 0 : *std::min_element(entries_.begin(), entries_.end()); }
  int max_entry() const { return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end()); }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<int> entries_;
};

struct MatrixViolation {
  enum class Kind { row_repeat, column_repeat, corner };
  Kind kind;
  // Cells (row, col) involved: two equal cells, plus the offending corner for Kind::corner.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
};

// Matrix-level 2-ranking test: rows and columns repeat-free, and equal entries
// A(i,j) = A(i',j') force both opposite corners A(i,j'), A(i',j) to be larger.
inline std::optional<MatrixViolation> check_matrix_ranking(const RankMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t j2 = j + 1; j2 < n; ++j2)
        if (a(i, j) == a(i, j2)) return MatrixViolation{MatrixViolation::Kind::row_repeat, {{i, j}, {i, j2}}};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t i2 = i + 1; i2 < m; ++i2)
        if (a(i, j) == a(i2, j)) return MatrixViolation{MatrixViolation::Kind::column_repeat, {{i, j}, {i2, j}}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i2 = i + 1; i2 < m; ++i2)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          if (j2 == j || a(i, j) != a(i2, j2)) continue;
          const int v = a(i, j);
          if (a(i, j2) <= v) return MatrixViolation{MatrixViolation::Kind::corner, {{i, j}, {i2, j2}, {i, j2}}};
          if (a(i2, j) <= v) return MatrixViolation{MatrixViolation::Kind::corner, {{i, j}, {i2, j2}, {i2, j}}};
        }
  return std::nullopt;
}

// Ranking of complete_grid(rows, cols); entries are zero-based ranks and are shifted by +1.
inline Ranking ranking_from_matrix(const RankMatrix& a) {
  if (a.min_entry() < 0) throw InputError("matrix entries must be >= 0");
  return Ranking::from_zero_based(a.entries());
}

// Same, checked against the dimensions of the K_m x K_n it is meant for.
inline Ranking ranking_from_matrix(const RankMatrix& a, std::size_t m, std::size_t n) {
  if (a.rows() != m || a.cols() != n)
    throw InputError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ", expected " +
                     std::to_string(m) + "x" + std::to_string(n));
  return ranking_from_matrix(a);
}

// ---------------------------------------------------------------------------
// Text formats

// One "vertex rank" line per vertex, ascending.
inline std::string write_ranking(const Ranking& r) {
  std::string out;
  for (std::size_t v = 0; v < r.size(); ++v)
    out += std::to_string(v) + " " + std::to_string(r[static_cast<Vertex>(v)]) + "\n";
  return out;
}

inline Ranking read_ranking(std::string_view text) {
  auto lines = detail::split_lines(text);
  std::vector<int> ranks;
  std::vector<char> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto fields = detail::parse_integers(lines[i], i + 1);
    if (fields.size() != 2) throw ParseError(i + 1, "ranking line must be 'vertex rank'");
    if (fields[0] < 0 || fields[0] >= static_cast<long long>(kMaxVertices)) throw ParseError(i + 1, "bad vertex id");
    if (fields[1] < 1 || fields[1] > std::numeric_limits<int>::max()) throw ParseError(i + 1, "rank must be >= 1");
    auto v = static_cast<std::size_t>(fields[0]);
    if (v >= ranks.size()) {
      ranks.resize(v + 1, 0);
      seen.resize(v + 1, 0);
    }
    if (seen[v]) throw ParseError(i + 1, "vertex " + std::to_string(v) + " ranked twice");
    seen[v] = 1;
    ranks[v] = static_cast<int>(fields[1]);
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw ParseError(0, "partial ranking: vertex " + std::to_string(v) + " has no rank");
  return Ranking(std::move(ranks));
}

inline std::string write_matrix(const RankMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(a(i, j));
    }
    out += '\n';
  }
  return out;
}

inline RankMatrix read_matrix(std::string_view text) {
  auto lines = detail::split_lines(text);
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto fields = detail::parse_integers(lines[i], i + 1);
    if (!rows.empty() && fields.size() != rows.front().size())
      throw ParseError(i + 1, "row has " + std::to_string(fields.size()) + " entries, expected " +
                                  std::to_string(rows.front().size()));
    std::vector<int> row;
    for (long long x : fields) {
      if (x < 0 || x > std::numeric_limits<int>::max()) throw ParseError(i + 1, "matrix entry out of range");
      row.push_back(static_cast<int>(x));
    }
    rows.push_back(std::move(row));
  }
  return RankMatrix::from_rows(rows);
}

}  // namespace tworank
