#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "tworank/degeneracy.hpp"
#include "tworank/errors.hpp"
#include "tworank/graph.hpp"
#include "tworank/ranking.hpp"

namespace tworank {

// ===========================================================================
// Hypercube Q_d, vertices = F_2^d. Coordinate i of a vertex is bit i of its id.
// ===========================================================================

// k x d matrix over F_2 stored column-wise; column j is a k-bit integer.
class GF2Matrix {
 public:
  GF2Matrix(int rows, std::vector<std::uint32_t> columns) : rows_(rows), columns_(std::move(columns)) {
    if (rows < 0 || rows > 31) throw ParameterError("GF2Matrix rows must be in [0,31]");
    for (auto c : columns_)
      if (c >> rows_) throw InputError("GF2Matrix column has bits beyond row count");
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return static_cast<int>(columns_.size()); }
  std::uint32_t column(int j) const { return columns_[j]; }

  // A * u, where bit j of u is coordinate j.
  std::uint32_t apply(std::uint64_t u) const {
    std::uint32_t acc = 0;
    for (int j = 0; u; ++j, u >>= 1)
      if (u & 1) acc ^= columns_[j];
    return acc;
  }

 private:
  int rows_;
  std::vector<std::uint32_t> columns_;
};

// d = t + 2^k with k >= 1 and 0 <= t <= 2^k - 1; unique, k = floor(log2 d).
struct CubeSplit {
  int k = 0;
  int t = 0;
};

inline CubeSplit cube_split(int d) {
  if (d < 2) throw ParameterError("cube split needs d >= 2");
  const int k = std::bit_width(static_cast<unsigned>(d)) - 1;
  return {k, d - (1 << k)};
}

// Columns 0..t-1 are the encodings of 1..t; columns t..d-1 are 0..2^k-1 in order.
inline GF2Matrix hypercube_code_matrix(int d) {
  auto [k, t] = cube_split(d);
  std::vector<std::uint32_t> cols;
  for (int j = 1; j <= t; ++j) cols.push_back(static_cast<std::uint32_t>(j));
  for (int x = 0; x < (1 << k); ++x) cols.push_back(static_cast<std::uint32_t>(x));
  return GF2Matrix(k, std::move(cols));
}

// First t columns distinct and nonzero; last 2^k columns a permutation of F_2^k.
inline bool is_hypercube_code_matrix(const GF2Matrix& a, int d) {
  auto [k, t] = cube_split(d);
  if (a.rows() != k || a.cols() != d) return false;
  std::vector<char> seen(std::size_t{1} << k, 0);
  for (int j = 0; j < t; ++j) {
    if (a.column(j) == 0 || seen[a.column(j)]) return false;
    seen[a.column(j)] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (int j = t; j < d; ++j) {
    if (seen[a.column(j)]) return false;
    seen[a.column(j)] = 1;
  }
  return true;
}

namespace detail {

// Rank in [0, d] of vertex u of Q_d. `top` replaces the canonical matrix at the outermost level.
inline int cube_rank(std::uint64_t u, int d, const GF2Matrix* top) {
  if (d <= 1) return static_cast<int>(u);
  auto [k, t] = cube_split(d);
  const std::uint64_t low = u & ((std::uint64_t{1} << t) - 1);
  const std::uint64_t high = u >> t;
  if (std::popcount(high) % 2 == 0) return cube_rank(low, t, nullptr);
  const std::uint32_t code = top ? top->apply(u) : hypercube_code_matrix(d).apply(u);
  return t + 1 + static_cast<int>(code);
}

}  // namespace detail

// 2-ranking of Q_d with the d + 1 ranks 1..d+1. Vertices whose last 2^k
// coordinates have even weight take the recursive low rank of their first t
// coordinates; odd weight maps through the code matrix to a high rank.
inline Ranking rank_hypercube(int d) {
  if (d < 0 || d > 30) throw SizeError("hypercube dimension must be in [0,30], got " + std::to_string(d));
  const std::uint64_t n = std::uint64_t{1} << d;
  std::vector<int> ranks(n);
  if (d >= 2) {
    const GF2Matrix a = hypercube_code_matrix(d);
    for (std::uint64_t u = 0; u < n; ++u) ranks[u] = detail::cube_rank(u, d, &a);
  } else {
    for (std::uint64_t u = 0; u < n; ++u) ranks[u] = static_cast<int>(u);
  }
  return Ranking::from_zero_based(ranks);
}

// Same construction with a caller-chosen code matrix at the top level.
inline Ranking rank_hypercube(int d, const GF2Matrix& top) {
  if (d < 2 || d > 30) throw SizeError("custom code matrix needs d in [2,30]");
  if (!is_hypercube_code_matrix(top, d)) throw InputError("matrix does not satisfy the code-matrix conditions");
  const std::uint64_t n = std::uint64_t{1} << d;
  std::vector<int> ranks(n);
  for (std::uint64_t u = 0; u < n; ++u) ranks[u] = detail::cube_rank(u, d, &top);
  return Ranking::from_zero_based(ranks);
}

// Ranking of cycle_product(lengths): reduce each coordinate mod 4, read Z_4
// as the Gray-coded 4-cycle 00-01-11-10, and use the Q_{2d} ranking.
inline Ranking rank_cycle_product(std::span<const int> lengths) {
  if (lengths.empty()) throw ParameterError("cycle product needs at least one factor");
  for (int m : lengths)
    if (m < 4 || m % 4 != 0) throw ParameterError("cycle length " + std::to_string(m) + " is not a positive multiple of 4");
  const int d = static_cast<int>(lengths.size());
  if (2 * d > 30) throw SizeError("too many cycle factors");
  const Ranking cube = rank_hypercube(2 * d);

  std::size_t total = 1;
  for (int m : lengths) {
    if (total > kMaxVertices / static_cast<std::size_t>(m)) throw SizeError("cycle product too large");
    total *= static_cast<std::size_t>(m);
  }
  static constexpr std::array<std::uint64_t, 4> gray{0b00, 0b01, 0b11, 0b10};
  std::vector<int> ranks(total);
  std::vector<int> coord(lengths.size(), 0);
  for (std::size_t id = 0; id < total; ++id) {
    std::uint64_t cube_vertex = 0;
    for (std::size_t i = 0; i < coord.size(); ++i) cube_vertex |= gray[coord[i] % 4] << (2 * i);
    ranks[id] = cube[static_cast<Vertex>(cube_vertex)];
    for (std::size_t i = coord.size(); i-- > 0;) {  // row-major increment, last factor fastest
      if (++coord[i] < lengths[i]) break;
      coord[i] = 0;
    }
  }
  return Ranking(std::move(ranks));
}

// ===========================================================================
// K_m x K_n via rank matrices (zero-based entries)
// ===========================================================================

// Replace each entry A(i,j) with the block l * A(i,j) + B.
inline RankMatrix block_product(const RankMatrix& a, const RankMatrix& b, int l) {
  if (l < 1) throw InputError("block rank count must be >= 1");
  if (a.rows() == 0 || a.cols() == 0 || b.rows() == 0 || b.cols() == 0) throw InputError("empty matrix");
  if (a.min_entry() < 0) throw InputError("outer matrix has a negative rank");
  if (b.min_entry() < 0 || b.max_entry() >= l)
    throw InputError("inner matrix ranks must lie in [0," + std::to_string(l - 1) + "]");
  if (static_cast<long long>(a.max_entry()) * l + l - 1 > std::numeric_limits<int>::max())
    throw SizeError("block product ranks overflow");
  const std::size_t c = b.rows(), d = b.cols();
  RankMatrix out(a.rows() * c, a.cols() * d, std::vector<int>(a.rows() * c * a.cols() * d));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < c; ++p)
        for (std::size_t q = 0; q < d; ++q) out(i * c + p, j * d + q) = l * a(i, j) + b(p, q);
  return out;
}

// 1 x t row 0..t-1: the K_1 x K_t ranking.
inline RankMatrix distinct_row(int t) {
  std::vector<int> row(static_cast<std::size_t>(t));
  std::iota(row.begin(), row.end(), 0);
  return RankMatrix(1, static_cast<std::size_t>(t), std::move(row));
}

inline RankMatrix km_kn_seed() { return RankMatrix{{1, 0}, {0, 2}}; }

inline bool is_power_of_two(int x) { return x > 0 && std::has_single_bit(static_cast<unsigned>(x)); }

// m, n powers of two with m <= n; uses n * 3^log2(m) / m ranks.
inline RankMatrix rank_km_kn_pow2(int m, int n) {
  if (!is_power_of_two(m) || !is_power_of_two(n)) throw ParameterError("m and n must be powers of two (round up first)");
  if (m > n) throw ParameterError("need m <= n");
  if (static_cast<long long>(m) * n > (1LL << 26)) throw SizeError("matrix too large");
  if (m == 1) return distinct_row(n);
  return block_product(rank_km_kn_pow2(m / 2, n / 2), km_kn_seed(), 3);
}

inline constexpr int kMaxFactorialOrder = 8;

inline long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// m x m! matrix with m! * H_m ranks. Block i copies the (m-1)-case into its
// own high-rank interval and inserts the low ranks 0..(m-1)!-1 as row i.
inline RankMatrix rank_km_factorial(int m) {
  if (m < 1) throw ParameterError("m must be >= 1");
  if (m > kMaxFactorialOrder) throw SizeError("m! grows too fast; m must be <= 8");
  if (m == 1) return RankMatrix{{0}};

  const RankMatrix prev = rank_km_factorial(m - 1);
  const int low = static_cast<int>(factorial(m - 1));
  const int prev_ranks = prev.max_entry() + 1;
  const std::size_t width = static_cast<std::size_t>(low);
  RankMatrix out(static_cast<std::size_t>(m), width * m, std::vector<int>(m * width * m));
  for (int block = 0; block < m; ++block) {
    const int shift = low + block * prev_ranks;
    for (std::size_t col = 0; col < width; ++col) {
      const std::size_t j = block * width + col;
      int src = 0;
      for (int row = 0; row < m; ++row) {
        out(row, j) = row == block ? static_cast<int>(col) : prev(src++, col) + shift;
      }
    }
  }
  return out;
}

// m! | n: factorial case blown up by the distinct row of length n / m!; n * H_m ranks.
inline RankMatrix rank_km_kn(int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("m and n must be >= 1");
  if (m > kMaxFactorialOrder) throw SizeError("m must be <= 8");
  const long long f = factorial(m);
  if (n % f != 0) throw ParameterError(std::to_string(m) + "! does not divide " + std::to_string(n));
  const int t = static_cast<int>(n / f);
  if (static_cast<long long>(m) * n > (1LL << 26)) throw SizeError("matrix too large");
  return block_product(rank_km_factorial(m), distinct_row(t), t);
}

// ===========================================================================
// C_3 x C_n from fixed 3-row blocks; row i = C_3 vertex, column j = C_n vertex.
// ===========================================================================

namespace c3cn {

using Block = std::vector<std::array<int, 3>>;  // columns, top to bottom

// Six-rank blocks (4 and 9 columns), agreeing on their first two and last two columns.
inline const Block& six_rank_4() {
  static const Block b{{2, 0, 1}, {4, 5, 3}, {0, 1, 2}, {5, 3, 4}};
  return b;
}
inline const Block& six_rank_9() {
  static const Block b{{2, 0, 1}, {4, 5, 3}, {0, 1, 2}, {3, 0, 4}, {1, 5, 0},
                       {0, 2, 3}, {4, 0, 5}, {0, 1, 2}, {5, 3, 4}};
  return b;
}
// Five-rank blocks (4 and 6 columns).
inline const Block& five_rank_4() {
  static const Block b{{0, 3, 4}, {1, 2, 0}, {0, 4, 3}, {2, 1, 0}};
  return b;
}
inline const Block& five_rank_6() {
  static const Block b{{0, 3, 4}, {1, 0, 2}, {3, 4, 0}, {0, 2, 1}, {4, 0, 3}, {2, 1, 0}};
  return b;
}

}  // namespace c3cn

// 3 x n array (zero-based ranks). Even n >= 4: 5 ranks; n >= 24: 6 ranks.
inline RankMatrix c3_cn_array(int n) {
  std::vector<const c3cn::Block*> blocks;
  if (n >= 4 && n % 2 == 0) {
    // n = 4q + 6r, r in {0, 1}
    const int r = (n % 4 == 2) ? 1 : 0;
    if (r) blocks.push_back(&c3cn::five_rank_6());
    for (int q = (n - 6 * r) / 4; q > 0; --q) blocks.push_back(&c3cn::five_rank_4());
  } else if (n >= 24) {
    // n = 4q + r = 4(q - 2r) + 9r
    const int r = n % 4, q = n / 4;
    for (int i = 0; i < r; ++i) blocks.push_back(&c3cn::six_rank_9());
    for (int i = 0; i < q - 2 * r; ++i) blocks.push_back(&c3cn::six_rank_4());
  } else {
    throw ParameterError("C3 x C" + std::to_string(n) +
                         ": no block construction for odd n < 24; use the exact solver (solve --family c3-cn)");
  }
  RankMatrix out(3, static_cast<std::size_t>(n), std::vector<int>(3 * static_cast<std::size_t>(n)));
  std::size_t j = 0;
  for (const auto* block : blocks)
    for (const auto& column : *block) {
      for (std::size_t i = 0; i < 3; ++i) out(i, j) = column[i];
      ++j;
    }
  return out;
}

// Ranking of cartesian_product(cycle(3), cycle(n)).
inline Ranking rank_c3_cn(int n) { return Ranking::from_zero_based(c3_cn_array(n).entries()); }

// ===========================================================================
// Subcubic graphs: rank 1 on a maximal independent set S, ranks 2..7 from a
// proper 6-coloring of G^2 restricted to the rest.
// ===========================================================================

namespace detail {

inline std::vector<Vertex> greedy_maximal_independent_set(const Graph& g, std::span<const Vertex> order) {
  std::vector<char> blocked(g.order(), 0);
  std::vector<Vertex> s;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    s.push_back(v);
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  std::sort(s.begin(), s.end());
  return s;
}

inline std::vector<Vertex> ascending_degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return order;
}

inline bool is_maximal_independent(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.order(), 0), dominated(g.order(), 0);
  for (Vertex v : s) in[v] = dominated[v] = 1;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) return false;
      dominated[w] = 1;
    }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

// Brute force over subsets of the given size; for the 10-vertex exceptional case.
inline std::optional<std::vector<Vertex>> maximal_independent_set_of_size(const Graph& g, int size) {
  const int n = static_cast<int>(g.order());
  if (n > 24) return std::nullopt;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != size) continue;
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (is_maximal_independent(g, s)) return s;
  }
  return std::nullopt;
}

inline bool looks_like_petersen(const Graph& g) {
  return g.order() == 10 && g.size() == 15 && g.min_degree() == 3 && g.max_degree() == 3 && girth(g) == 5;
}

inline bool looks_like_heawood(const Graph& g) {
  return g.order() == 14 && g.size() == 21 && g.min_degree() == 3 && g.max_degree() == 3 && is_bipartite(g) &&
         girth(g) == 6;
}

// Colors (0..5) of G^2[V - S] for the vertices outside S, or nullopt if some
// component is K_7 or resists 6-coloring by the greedy orders tried.
inline std::optional<std::vector<int>> color_square_outside(const Graph& g, std::span<const Vertex> s,
                                                            std::mt19937_64& rng) {
  std::vector<char> in_s(g.order(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    if (!in_s[v]) rest.push_back(v);

  const Graph square = induced_subgraph(distance_power(g, 2), rest);
  const Components comps = connected_components(square);
  std::vector<int> color(g.order(), -1);
  for (int c = 0; c < comps.count; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < static_cast<Vertex>(square.order()); ++v)
      if (comps.id[v] == c) members.push_back(v);
    const Graph part = induced_subgraph(square, members);
    if (part.order() == 7 && part.size() == 21) return std::nullopt;

    std::vector<int> local = smallest_last_coloring(part);
    auto fits = [](const std::vector<int>& col) { return *std::max_element(col.begin(), col.end()) < 6; };
    for (int attempt = 0; attempt < 10 && !fits(local); ++attempt) {
      std::vector<Vertex> order(part.order());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      local = greedy_coloring(part, order);
    }
    if (!fits(local)) return std::nullopt;
    for (std::size_t i = 0; i < members.size(); ++i) color[rest[members[i]]] = local[i];
  }
  return color;
}

// Zero-based ranks 0..6 for a connected subcubic graph.
inline std::vector<int> rank_connected_subcubic(const Graph& g, std::mt19937_64& rng) {
  auto assemble = [&](std::span<const Vertex> s) -> std::optional<std::vector<int>> {
    auto color = color_square_outside(g, s, rng);
    if (!color) return std::nullopt;
    std::vector<int> ranks(g.order());
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) ranks[v] = (*color)[v] < 0 ? 0 : (*color)[v] + 1;
    return ranks;
  };

  const auto by_degree = ascending_degree_order(g);
  if (auto ranks = assemble(greedy_maximal_independent_set(g, by_degree))) return *ranks;

  if (looks_like_petersen(g)) {
    if (auto s = maximal_independent_set_of_size(g, 4))
      if (auto ranks = assemble(*s)) return *ranks;
  } else if (looks_like_heawood(g)) {
    // a vertex together with the vertices antipodal to it
    std::vector<Vertex> s{0};
    const auto dist = bfs_distances(g, 0);
    const int diam = *std::max_element(dist.begin(), dist.end());
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
      if (dist[v] == diam) s.push_back(v);
    if (is_maximal_independent(g, s))
      if (auto ranks = assemble(s)) return *ranks;
  }

  std::vector<Vertex> order = by_degree;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::shuffle(order.begin(), order.end(), rng);
    if (auto ranks = assemble(greedy_maximal_independent_set(g, order))) return *ranks;
  }
  throw ConstructionFailed("subcubic construction exhausted 100 independent-set restarts");
}

}  // namespace detail

// 2-ranking with at most 7 ranks of a graph with maximum degree <= 3.
inline Ranking rank_subcubic(const Graph& g, std::uint64_t seed = 0) {
  if (g.max_degree() > 3) throw ParameterError("graph is not subcubic (max degree " + std::to_string(g.max_degree()) + ")");
  std::mt19937_64 rng(seed);
  std::vector<int> ranks(g.order(), 0);
  const Components comps = connected_components(g);
  for (int c = 0; c < comps.count; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
      if (comps.id[v] == c) members.push_back(v);
    const auto local = detail::rank_connected_subcubic(induced_subgraph(g, members), rng);
    for (std::size_t i = 0; i < members.size(); ++i) ranks[members[i]] = local[i];
  }
  return Ranking::from_zero_based(ranks);
}

}  // namespace tworank
