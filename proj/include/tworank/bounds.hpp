#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tworank/degeneracy.hpp"
#include "tworank/errors.hpp"
#include "tworank/graph.hpp"
#include "tworank/ranking.hpp"

namespace tworank {

using Rational = boost::rational<std::int64_t>;

// H_m = 1 + 1/2 + ... + 1/m, exact. 64-bit terms suffice for m <= 20.
inline Rational harmonic_number(int m) {
  if (m < 1) throw ParameterError("harmonic number needs m >= 1");
  if (m > 20) throw SizeError("exact harmonic numbers limited to m <= 20");
  Rational h(0);
  for (int i = 1; i <= m; ++i) h += Rational(1, i);
  return h;
}

inline std::int64_t ceil(const Rational& q) {
  const auto num = q.numerator(), den = q.denominator();  // den > 0
  return num >= 0 ? (num + den - 1) / den : num / den;
}

struct HarmonicBound {
  Rational exact;      // n * H_m
  std::int64_t ranks;  // ceiling: the integer lower bound on chi_2(K_m x K_n)
};

// chi_2(K_m x K_n) >= n * H_m, where m is the column height.
inline HarmonicBound harmonic_lower_bound(int m, int n) {
  if (n < 1) throw ParameterError("harmonic bound needs n >= 1");
  Rational q = harmonic_number(m) * Rational(n);
  return {q, ceil(q)};
}

// Recognizes graphs whose labels are "(a,b)" integer pairs forming K_m x K_n.
// Returns (m, n) with the first coordinate as rows.
inline std::optional<std::pair<int, int>> detect_complete_grid(const Graph& g) {
  if (!g.has_labels() || g.order() == 0) return std::nullopt;
  std::vector<std::pair<int, int>> coord(g.order());
  int m = 0, n = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    const std::string& s = g.labels()[v];
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') return std::nullopt;
    auto comma = s.find(',');
    if (comma == std::string::npos) return std::nullopt;
    int a = 0, b = 0;
    auto r1 = std::from_chars(s.data() + 1, s.data() + comma, a);
    auto r2 = std::from_chars(s.data() + comma + 1, s.data() + s.size() - 1, b);
    if (r1.ec != std::errc{} || r1.ptr != s.data() + comma || r2.ec != std::errc{} ||
        r2.ptr != s.data() + s.size() - 1 || a < 0 || b < 0)
      return std::nullopt;
    coord[v] = {a, b};
    m = std::max(m, a + 1);
    n = std::max(n, b + 1);
  }
  if (static_cast<std::size_t>(m) * n != g.order()) return std::nullopt;
  {
    auto sorted = coord;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  }
  const std::size_t expected_edges = static_cast<std::size_t>(m) * n * (m - 1 + n - 1) / 2;
  if (g.size() != expected_edges) return std::nullopt;
  for (auto [u, v] : g.edges())
    if ((coord[u].first == coord[v].first) == (coord[u].second == coord[v].second)) return std::nullopt;
  return std::pair{m, n};
}

// ---------------------------------------------------------------------------
// Multiplicity audit for matrix rankings

struct MultiplicityFailure {
  std::size_t column;
  std::size_t k;         // the k highest entries of the column were examined
  int rank;              // a rank among them ...
  std::size_t multiplicity;  // ... occurring more than k times in the matrix
};

// For every column and k in [1, m], each of the k highest entries of the
// column occurs at most k times in the whole matrix. Holds for every valid
// 2-ranking, so a failure points at a checker bug. Throws InputError when the
// matrix is not a valid 2-ranking.
inline std::optional<MultiplicityFailure> audit_rank_multiplicity(const RankMatrix& a) {
  if (auto bad = check_matrix_ranking(a)) throw InputError("matrix is not a valid 2-ranking");
  std::map<int, std::size_t> count;
  for (int x : a.entries()) ++count[x];
  std::vector<int> column(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) column[i] = a(i, j);
    std::sort(column.rbegin(), column.rend());
    for (std::size_t k = 1; k <= column.size(); ++k)
      for (std::size_t i = 0; i < k; ++i)
        if (count[column[i]] > k) return MultiplicityFailure{j, k, column[i], count[column[i]]};
  }
  return std::nullopt;
}

// Number of ranks used by exactly i vertices, i = 1..max (index 0 unused).
inline std::vector<std::size_t> multiplicity_histogram(const RankMatrix& a) {
  std::map<int, std::size_t> count;
  for (int x : a.entries()) ++count[x];
  std::size_t top = 0;
  for (auto& [r, c] : count) top = std::max(top, c);
  std::vector<std::size_t> hist(top + 1, 0);
  for (auto& [r, c] : count) ++hist[c];
  return hist;
}

// ---------------------------------------------------------------------------
// Random graphs

// SplitMix64 step; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// G(n, p): each pair u < v, in lexicographic order, is an edge independently
// with probability p. Uses the top 53 bits of mt19937_64 so results are
// identical across standard libraries.
inline Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ParameterError("G(n,p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("G(n,p) needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace tworank
