#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tworank/bounds.hpp"
#include "tworank/degeneracy.hpp"
#include "tworank/graph.hpp"
#include "tworank/isomorphism.hpp"
#include "tworank/ranking.hpp"

namespace tworank {

// Zero fields mean "unlimited".
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
};

struct SolveOptions {
  Budget budget;
  // Seed the lower bound with n * H_m when the graph is a labelled K_m x K_n.
  bool harmonic_seed = true;
};

// Exact when lower == upper. `witness` always achieves `upper`.
struct SolveResult {
  int lower = 0;
  int upper = 0;
  Ranking witness;
  std::uint64_t nodes_explored = 0;
  double seconds = 0;

  bool exact() const noexcept { return lower == upper; }
  int chi() const {
    if (!exact()) throw std::logic_error("search budget exceeded; only bounds are known");
    return upper;
  }
};

namespace detail {

enum class Objective { coloring, ranking, star };

inline constexpr int kMaxSearchRanks = 64;

// Depth-first search for an assignment of ranks 1..t meeting the objective,
// with bitmask domains (bit r-1 <=> rank r) and minimum-domain branching.
class RankSearch {
 public:
  enum class Outcome { found, exhausted, budget };

  RankSearch(const Graph& g, Objective objective, int path_cap, const Budget& budget)
      : g_(g), objective_(objective), path_cap_(path_cap), budget_(budget), start_(Clock::now()) {
    static_order();
  }

  // Calls `on_solution` for each complete assignment; it returns false to stop.
  Outcome run(int t, const std::function<bool(const std::vector<int>&)>& on_solution) {
    const std::size_t n = g_.order();
    t_ = t;
    full_ = t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
    rank_.assign(n, 0);
    use_count_.assign(static_cast<std::size_t>(t) + 1, 0);
    domains_.assign((n + 1) * n, full_);
    on_solution_ = &on_solution;
    budget_hit_ = false;
    stopped_ = false;
    if (n == 0) {
      if (t == 0) on_solution(rank_);
      return t == 0 ? Outcome::found : Outcome::exhausted;
    }
    found_any_ = false;
    dfs(0, 0);
    if (budget_hit_) return Outcome::budget;
    return found_any_ ? Outcome::found : Outcome::exhausted;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  using Clock = std::chrono::steady_clock;

  static std::uint64_t bit(int r) { return std::uint64_t{1} << (r - 1); }
  // ranks strictly above r
  std::uint64_t above(int r) const { return r >= 64 ? 0 : full_ & ~((std::uint64_t{1} << r) - 1); }

  // BFS from a maximum-degree vertex (lowest id), restarted per component.
  void static_order() {
    const std::size_t n = g_.order();
    position_.assign(n, 0);
    std::vector<char> seen(n, 0);
    std::size_t next = 0;
    while (next < n) {
      Vertex root = -1;
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        if (!seen[v] && (root < 0 || g_.degree(v) > g_.degree(root))) root = v;
      std::deque<Vertex> queue{root};
      seen[root] = 1;
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        position_[u] = next++;
        for (Vertex w : g_.neighbors(u))
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
  }

  bool out_of_budget() {
    if (budget_.max_nodes && nodes_ >= budget_.max_nodes) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 0xff) == 0 && elapsed() > budget_.max_seconds) return true;
    return false;
  }

  void dfs(std::size_t depth, int max_used) {
    const std::size_t n = g_.order();
    if (depth == n) {
      found_any_ = true;
      if (!(*on_solution_)(rank_)) stopped_ = true;
      return;
    }
    const std::uint64_t* dom = &domains_[depth * n];

    Vertex v = -1;
    int best = 65;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
      if (rank_[u]) continue;
      int size = std::popcount(dom[u]);
      if (size < best || (size == best && position_[u] < position_[v])) {
        best = size;
        v = u;
      }
    }

    std::uint64_t choices = dom[v];
    // Colorings are invariant under permuting colors: open at most one new color.
    if (objective_ != Objective::ranking && max_used < t_) choices &= (std::uint64_t{1} << (max_used + 1)) - 1;

    while (choices && !stopped_ && !budget_hit_) {
      const int r = std::countr_zero(choices) + 1;
      choices &= choices - 1;
      ++nodes_;
      if (out_of_budget()) {
        budget_hit_ = true;
        return;
      }
      std::uint64_t* next = &domains_[(depth + 1) * n];
      std::copy(dom, dom + n, next);
      rank_[v] = r;
      ++use_count_[r];
      if (propagate(v, r, next) && all_ranks_reachable(next, n - depth - 1)) dfs(depth + 1, std::max(max_used, r));
      --use_count_[r];
      rank_[v] = 0;
    }
  }

  bool propagate(Vertex v, int r, std::uint64_t* dom) {
    const std::uint64_t rb = bit(r);
    if (objective_ != Objective::ranking) {
      for (Vertex w : g_.neighbors(v))
        if (!rank_[w] && !(dom[w] &= ~rb)) return false;
      return objective_ == Objective::coloring || star_consistent(v, r);
    }

    // Ranks >= r held by ranked neighbors of v: v cannot separate them from
    // another neighbor carrying the same rank.
    std::uint64_t blocked_through_v = 0;
    for (Vertex u : g_.neighbors(v))
      if (rank_[u] >= r) blocked_through_v |= bit(rank_[u]);

    for (Vertex w : g_.neighbors(v)) {
      if (!rank_[w]) {
        std::uint64_t d = dom[w] & ~rb & ~blocked_through_v;
        for (Vertex u : g_.neighbors(w))
          if (u != v && rank_[u] == r) {
            d &= above(r);  // w sits between two vertices of rank r
            break;
          }
        if (!(dom[w] = d)) return false;
      } else if (rank_[w] <= r) {
        for (Vertex u : g_.neighbors(w))
          if (u != v && !rank_[u] && !(dom[u] &= ~rb)) return false;
      }
    }
    return path_cap_ <= 2 || long_paths_consistent(v, r);
  }

  // Every rank 1..t must still be placeable: a chi-level search with an
  // unused rank would be a ranking with fewer ranks.
  bool all_ranks_reachable(const std::uint64_t* dom, std::size_t unassigned) const {
    std::uint64_t used = 0;
    for (int r = 1; r <= t_; ++r)
      if (use_count_[r]) used |= bit(r);
    const std::uint64_t missing = full_ & ~used;
    if (static_cast<std::size_t>(std::popcount(missing)) > unassigned) return false;
    if (!missing) return true;
    std::uint64_t reachable = 0;
    for (Vertex u = 0; u < static_cast<Vertex>(g_.order()); ++u)
      if (!rank_[u]) {
        if (!dom[u]) return false;
        reachable |= dom[u];
      }
    return (missing & ~reachable) == 0;
  }

  // No 2-colored P4 through v among colored vertices (v at position 1 or 2).
  bool star_consistent(Vertex v, int r) const {
    for (Vertex a : g_.neighbors(v)) {
      if (!rank_[a]) continue;
      // v - a - b - c
      for (Vertex b : g_.neighbors(a)) {
        if (b == v || rank_[b] != r) continue;
        for (Vertex c : g_.neighbors(b))
          if (c != a && c != v && rank_[c] == rank_[a]) return false;
      }
      // a - v - b - c
      for (Vertex b : g_.neighbors(v)) {
        if (b == a || rank_[b] != rank_[a]) continue;
        for (Vertex c : g_.neighbors(b))
          if (c != v && c != a && rank_[c] == r) return false;
      }
    }
    return true;
  }

  struct Arm {
    Vertex end;
    int interior_max;
    int length;
    std::vector<Vertex> vertices;  // excluding the shared start
  };

  void collect_arms(Vertex at, int interior_max, std::vector<Vertex>& trail, std::vector<char>& on,
                    std::vector<Arm>& arms) const {
    if (static_cast<int>(trail.size()) >= path_cap_) return;
    for (Vertex w : g_.neighbors(at)) {
      if (on[w] || !rank_[w]) continue;
      trail.push_back(w);
      on[w] = 1;
      arms.push_back({w, interior_max, static_cast<int>(trail.size()), trail});
      collect_arms(w, std::max(interior_max, rank_[w]), trail, on, arms);
      on[w] = 0;
      trail.pop_back();
    }
  }

  // Paths of length up to path_cap_ through v, entirely among ranked vertices.
  bool long_paths_consistent(Vertex v, int r) const {
    std::vector<Arm> arms;
    std::vector<Vertex> trail;
    std::vector<char> on(g_.order(), 0);
    on[v] = 1;
    collect_arms(v, 0, trail, on, arms);
    for (const Arm& a : arms)
      if (rank_[a.end] == r && a.interior_max <= r) return false;
    for (std::size_t i = 0; i < arms.size(); ++i) {
      const Arm& a = arms[i];
      const int top = rank_[a.end];
      if (top < r || a.interior_max > top) continue;
      for (std::size_t j = i + 1; j < arms.size(); ++j) {
        const Arm& b = arms[j];
        if (rank_[b.end] != top || b.interior_max > top || a.length + b.length > path_cap_) continue;
        bool disjoint = std::none_of(a.vertices.begin(), a.vertices.end(), [&](Vertex x) {
          return std::find(b.vertices.begin(), b.vertices.end(), x) != b.vertices.end();
        });
        if (disjoint) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  Objective objective_;
  int path_cap_;
  Budget budget_;
  Clock::time_point start_;
  std::vector<std::size_t> position_;

  int t_ = 0;
  std::uint64_t full_ = 0;
  std::vector<int> rank_;
  std::vector<int> use_count_;
  std::vector<std::uint64_t> domains_;  // one row of n domains per depth
  const std::function<bool(const std::vector<int>&)>* on_solution_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  bool stopped_ = false;
  bool found_any_ = false;
};

inline SolveResult iterative_deepening(const Graph& g, Objective objective, int path_cap, int lower,
                                       std::vector<int> upper_witness, const Budget& budget) {
  SolveResult res;
  res.witness = Ranking(upper_witness);
  res.upper = static_cast<int>(res.witness.rank_count());
  res.lower = std::min(lower, res.upper);
  RankSearch search(g, objective, path_cap, budget);
  while (res.lower < res.upper && res.lower <= kMaxSearchRanks) {
    std::vector<int> found;
    auto outcome = search.run(res.lower, [&](const std::vector<int>& ranks) {
      found = ranks;
      return false;
    });
    if (outcome == RankSearch::Outcome::budget) break;
    if (outcome == RankSearch::Outcome::found) {
      res.upper = res.lower;
      res.witness = Ranking(std::move(found));
      break;
    }
    ++res.lower;
  }
  res.nodes_explored = search.nodes();
  res.seconds = search.elapsed();
  return res;
}

// Greedy coloring of G^k shifted to ranks 1..; a valid k-ranking and, for k = 2, a star coloring.
inline std::vector<int> power_coloring(const Graph& g, int k) {
  const Graph target = k == 1 ? g : distance_power(g, k);
  auto colors = smallest_last_coloring(target);
  for (int& c : colors) ++c;
  return colors;
}

}  // namespace detail

// Degeneracy + 1, raised to the harmonic bound on labelled K_m x K_n.
inline int chi2_lower_bound(const Graph& g, bool harmonic_seed = true) {
  int lower = g.order() == 0 ? 0 : degeneracy(g).value + 1;
  if (harmonic_seed)
    if (auto grid = detect_complete_grid(g)) {
      auto [m, n] = *grid;
      if (std::min(m, n) <= 20) {
        if (m <= 20) lower = std::max<int>(lower, static_cast<int>(harmonic_lower_bound(m, n).ranks));
        if (n <= 20) lower = std::max<int>(lower, static_cast<int>(harmonic_lower_bound(n, m).ranks));
      }
    }
  return lower;
}

// chi_k(G): k = 1 is the chromatic number, k = kUnbounded the ranking number.
inline SolveResult solve_chi_k(const Graph& g, int k, const SolveOptions& options = {}) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (k == 1) {
    int lower = g.order() == 0 ? 0 : (g.size() ? 2 : 1);
    return detail::iterative_deepening(g, detail::Objective::coloring, 1, lower, detail::power_coloring(g, 1),
                                       options.budget);
  }
  // No simple path is longer than n - 1.
  const long long longest = std::max<long long>(2, static_cast<long long>(g.order()) - 1);
  const int cap = static_cast<int>(std::min<long long>(k, longest));
  return detail::iterative_deepening(g, detail::Objective::ranking, cap, chi2_lower_bound(g, options.harmonic_seed),
                                     detail::power_coloring(g, cap), options.budget);
}

inline SolveResult solve_chi2(const Graph& g, const SolveOptions& options = {}) { return solve_chi_k(g, 2, options); }

// Star chromatic number: proper coloring with no 2-colored P4.
inline SolveResult solve_star_chromatic(const Graph& g, const SolveOptions& options = {}) {
  int lower = g.order() == 0 ? 0 : (g.size() ? 2 : 1);
  return detail::iterative_deepening(g, detail::Objective::star, 2, lower, detail::power_coloring(g, 2),
                                     options.budget);
}

// ---------------------------------------------------------------------------
// Optimal 2-rankings up to automorphism

struct EnumerationResult {
  int chi = 0;
  std::size_t solutions = 0;              // optimal rankings found (labelled)
  std::size_t automorphism_count = 0;
  std::vector<Ranking> representatives;   // lexicographically least member of each class
  bool complete = false;                  // false when a budget cut the search short
};

// Two rankings are equivalent when one is the other composed with an
// automorphism. Every optimal ranking uses all chi ranks, so the only
// order-preserving relabeling of ranks is the identity.
inline EnumerationResult enumerate_optimal_chi2(const Graph& g, const SolveOptions& options = {}) {
  if (g.order() > 20) throw SizeError("enumeration limited to 20 vertices");
  EnumerationResult out;
  SolveResult solved = solve_chi2(g, options);
  if (!solved.exact()) return out;
  out.chi = solved.chi();

  const auto autos = automorphisms(g);
  out.automorphism_count = autos.size();
  std::set<std::vector<int>> classes;
  detail::RankSearch search(g, detail::Objective::ranking, 2, options.budget);
  auto outcome = search.run(out.chi, [&](const std::vector<int>& ranks) {
    ++out.solutions;
    std::vector<int> best = ranks, image(ranks.size());
    for (const auto& sigma : autos) {
      for (std::size_t v = 0; v < ranks.size(); ++v) image[v] = ranks[sigma[v]];
      if (image < best) best = image;
    }
    classes.insert(std::move(best));
    return true;
  });
  out.complete = outcome != detail::RankSearch::Outcome::budget;
  for (const auto& c : classes) out.representatives.emplace_back(c);
  return out;
}

}  // namespace tworank
