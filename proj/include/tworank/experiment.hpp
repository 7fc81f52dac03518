#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tworank/bounds.hpp"
#include "tworank/solver.hpp"

namespace tworank {

// ---------------------------------------------------------------------------
// Bound reports

struct BoundReport {
  std::string graph_id;
  int degeneracy_bound = 0;  // degeneracy + 1
  std::optional<HarmonicBound> harmonic;
  std::optional<int> construction_upper;
  std::optional<std::pair<int, int>> solver_bracket;
  std::vector<std::size_t> multiplicity_histogram;  // from the construction matrix, if any

  int lower() const {
    int lo = degeneracy_bound;
    if (harmonic) lo = std::max<int>(lo, static_cast<int>(harmonic->ranks));
    if (solver_bracket) lo = std::max(lo, solver_bracket->first);
    return lo;
  }
  std::optional<int> upper() const {
    std::optional<int> up = construction_upper;
    if (solver_bracket) up = up ? std::min(*up, solver_bracket->second) : solver_bracket->second;
    return up;
  }
  bool consistent() const { return !upper() || lower() <= *upper(); }
};

inline BoundReport make_bound_report(std::string id, const Graph& g, const std::optional<Ranking>& construction,
                                     const std::optional<RankMatrix>& matrix = std::nullopt,
                                     const SolveResult* solved = nullptr) {
  BoundReport rep;
  rep.graph_id = std::move(id);
  rep.degeneracy_bound = g.order() == 0 ? 0 : degeneracy(g).value + 1;
  if (auto grid = detect_complete_grid(g); grid && grid->first <= 20) rep.harmonic = harmonic_lower_bound(grid->first, grid->second);
  if (construction) rep.construction_upper = static_cast<int>(construction->rank_count());
  if (matrix) rep.multiplicity_histogram = multiplicity_histogram(*matrix);
  if (solved) rep.solver_bracket = std::pair{solved->lower, solved->upper};
  return rep;
}

// ---------------------------------------------------------------------------
// Random-graph experiment

using PRule = std::function<double(int n)>;

inline PRule constant_p(double p) {
  return [p](int) { return p; };
}

// p = c * sqrt(ln n / n), clipped to [0, 1].
inline PRule sqrt_log_rule(double c) {
  return [c](int n) { return n <= 1 ? 0.0 : std::clamp(c * std::sqrt(std::log(n) / n), 0.0, 1.0); };
}

struct ExperimentRow {
  int n = 0;
  double p = 0;
  int trial = 0;
  int chi2_lo = 0;
  int chi2_hi = 0;
  int max_degree = 0;
  int degeneracy = 0;
};

struct ExperimentSummary {
  int n = 0;
  double mean_chi2_lo = 0;
  double mean_chi2_hi = 0;
  double mean_max_degree = 0;
  int bracketed = 0;  // trials where the budget stopped the solver
};

inline std::uint64_t trial_seed(std::uint64_t seed, int n, int trial) {
  return mix_seed(seed ^ mix_seed(static_cast<std::uint64_t>(n) * 1000003ULL + static_cast<std::uint64_t>(trial)));
}

// Samples G(n, p(n)) `trials` times per n and solves chi_2 under `budget`.
// Trials run on `threads` workers; rows come back ordered by (n, trial).
inline std::vector<ExperimentRow> random_chi2_experiment(const std::vector<int>& n_values, const PRule& p_rule,
                                                         int trials, std::uint64_t seed, const Budget& budget = {},
                                                         unsigned threads = 1) {
  if (trials < 0) throw ParameterError("trial count must be >= 0");
  for (int n : n_values)
    if (n < 1 || n > 14) throw ParameterError("experiment n must be in [1,14] for exact solving, got " + std::to_string(n));

  std::vector<ExperimentRow> rows;
  for (int n : n_values)
    for (int t = 0; t < trials; ++t) rows.push_back({n, p_rule(n), t});

  auto work = [&](std::size_t i) {
    ExperimentRow& row = rows[i];
    const Graph g = sample_gnp(row.n, row.p, trial_seed(seed, row.n, row.trial));
    SolveResult res = solve_chi2(g, {budget, true});
    row.chi2_lo = res.lower;
    row.chi2_hi = res.upper;
    row.max_degree = static_cast<int>(g.max_degree());
    row.degeneracy = degeneracy(g).value;
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rows.size(); i += threads) work(i);
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

inline std::vector<ExperimentSummary> summarize(const std::vector<ExperimentRow>& rows) {
  std::map<int, std::vector<const ExperimentRow*>> by_n;
  for (const auto& r : rows) by_n[r.n].push_back(&r);
  std::vector<ExperimentSummary> out;
  for (auto& [n, group] : by_n) {
    ExperimentSummary s{n};
    for (const auto* r : group) {
      s.mean_chi2_lo += r->chi2_lo;
      s.mean_chi2_hi += r->chi2_hi;
      s.mean_max_degree += r->max_degree;
      if (r->chi2_lo != r->chi2_hi) ++s.bracketed;
    }
    const double k = static_cast<double>(group.size());
    s.mean_chi2_lo /= k;
    s.mean_chi2_hi /= k;
    s.mean_max_degree /= k;
    out.push_back(s);
  }
  return out;
}

inline std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "n,p,trial,chi2_lo,chi2_hi,max_degree,degeneracy\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.p << ',' << r.trial << ',' << r.chi2_lo << ',' << r.chi2_hi << ',' << r.max_degree << ','
        << r.degeneracy << '\n';
  return out.str();
}

}  // namespace tworank
