#pragma once

// Command-line driver. `run` takes explicit streams so tests can call it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tworank/tworank.hpp"

namespace tworank::cli {

using nlohmann::json;

// Argument-level failure; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string family;
  std::string graph_path;
  int d = -1;
  int m = -1;
  int n = -1;
  std::vector<int> lengths;
  double p = -1;
  std::uint64_t seed = 0;
};

struct Family {
  Graph graph;
  std::optional<RankMatrix> matrix;  // matrix-based families
  std::string id;
};

inline int require(int value, const char* flag, const std::string& family) {
  if (value < 0) throw UsageError("--family " + family + " needs " + flag);
  return value;
}

inline std::vector<std::string> family_names() {
  return {"hypercube", "cycle-product", "km-kn", "km-kn-pow2", "c3-cn", "subcubic-file", "petersen", "heawood", "wagner", "gnp"};
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return read_graph(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Resolves exactly one graph source. A family's own construction is only built when `construct` is set.
inline Family resolve_graph(const GraphSource& src, bool construct) {
  const bool has_family = !src.family.empty();
  const bool has_file = !src.graph_path.empty();
  if (src.family == "subcubic-file") {
    if (!has_file) throw UsageError("--family subcubic-file needs --graph");
    return {load_graph_file(src.graph_path), std::nullopt, src.graph_path};
  }
  if (has_family == has_file) throw UsageError("give exactly one of --family or --graph");
  if (has_file) return {load_graph_file(src.graph_path), std::nullopt, src.graph_path};

  const std::string& f = src.family;
  if (f == "hypercube") {
    const int d = require(src.d, "--d", f);
    return {hypercube(d), std::nullopt, "Q" + std::to_string(d)};
  }
  if (f == "cycle-product") {
    if (src.lengths.empty()) throw UsageError("--family cycle-product needs --lengths");
    std::string id = "C";
    for (std::size_t i = 0; i < src.lengths.size(); ++i) id += (i ? "xC" : "") + std::to_string(src.lengths[i]);
    return {cycle_product(src.lengths), std::nullopt, id};
  }
  if (f == "km-kn" || f == "km-kn-pow2") {
    const int m = require(src.m, "--m", f), n = require(src.n, "--n", f);
    std::optional<RankMatrix> a;
    if (construct) a = f == "km-kn" ? rank_km_kn(m, n) : rank_km_kn_pow2(m, n);
    return {complete_grid(m, n), a, "K" + std::to_string(m) + "xK" + std::to_string(n)};
  }
  if (f == "c3-cn") {
    const int n = require(src.n, "--n", f);
    std::optional<RankMatrix> a;
    if (construct) a = c3_cn_array(n);
    return {cartesian_product(cycle(3), cycle(n)), a, "C3xC" + std::to_string(n)};
  }
  if (f == "petersen") return {petersen(), std::nullopt, "petersen"};
  if (f == "heawood") return {heawood(), std::nullopt, "heawood"};
  if (f == "wagner") return {wagner_c8_antipodal(), std::nullopt, "wagner"};
  if (f == "gnp") {
    const int n = require(src.n, "--n", f);
    if (src.p < 0) throw UsageError("--family gnp needs --p");
    return {sample_gnp(n, src.p, src.seed), std::nullopt, "gnp"};
  }
  throw UsageError("unknown family '" + f + "'");
}

// The family's construction; gnp and plain files fall back to a greedy distance-2 coloring.
inline Ranking construct_ranking(const GraphSource& src, const Family& fam, std::string& method) {
  const std::string& f = src.family;
  if (fam.matrix) {
    method = f;
    return ranking_from_matrix(*fam.matrix);
  }
  if (f == "hypercube") {
    method = "hypercube";
    return rank_hypercube(src.d);
  }
  if (f == "cycle-product") {
    method = "cycle-product";
    return rank_cycle_product(src.lengths);
  }
  if (fam.graph.max_degree() <= 3) {
    method = "subcubic";
    return rank_subcubic(fam.graph, src.seed);
  }
  method = "greedy-square-coloring";
  return Ranking(detail::power_coloring(fam.graph, 2));
}

inline int parse_k(const std::string& text) {
  if (text == "inf") return kUnbounded;
  try {
    std::size_t pos = 0;
    const int k = std::stoi(text, &pos);
    if (pos == text.size() && k >= 1) return k;
  } catch (const std::exception&) {
  }
  throw UsageError("--k must be a positive integer or 'inf', got '" + text + "'");
}

inline std::string k_text(int k) { return k == kUnbounded ? "inf" : std::to_string(k); }

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

inline std::string join(const std::vector<Vertex>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline json matrix_json(const RankMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline Budget make_budget(std::uint64_t nodes, double seconds) { return {nodes, seconds}; }

inline void add_source_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--family", src.family, "Named graph family")->check(CLI::IsMember(family_names()));
  cmd->add_option("--graph", src.graph_path, "Edge-list graph file");
  cmd->add_option("--d", src.d, "Hypercube dimension");
  cmd->add_option("--m", src.m, "Rows of K_m x K_n");
  cmd->add_option("--n", src.n, "Columns of K_m x K_n, cycle length, or G(n,p) order");
  cmd->add_option("--lengths", src.lengths, "Cycle lengths, comma separated")->delimiter(',');
  cmd->add_option("--p", src.p, "Edge probability");
  cmd->add_option("--seed", src.seed, "Random seed")->capture_default_str();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and solve 2-rankings of graphs", "tworank"};
  app.require_subcommand(1);

  GraphSource src;
  bool as_json = false;
  std::string out_path, graph_out, ranking_path, matrix_path, witness_path, k_str = "2";
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  bool star = false, no_seed = false, allow_long = false, show_all = false;
  int trials = 10, threads = 1;
  std::vector<int> n_values;
  double c_rule = -1;

  auto common = [&](CLI::App* cmd) {
    add_source_options(cmd, src);
    cmd->add_flag("--json", as_json, "Machine-readable output");
  };
  auto budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", budget_nodes, "Search node limit (0 = none)");
    cmd->add_option("--budget-seconds", budget_seconds, "Search time limit (0 = none)");
  };

  auto* construct = app.add_subcommand("construct", "Build a ranking from a family construction");
  common(construct);
  construct->add_option("--out", out_path, "Write the ranking or matrix here");
  construct->add_option("--graph-out", graph_out, "Write the graph edge list here");

  auto* verify = app.add_subcommand("verify", "Check a ranking or matrix");
  common(verify);
  verify->add_option("--ranking", ranking_path, "Ranking file (vertex rank per line)");
  verify->add_option("--matrix", matrix_path, "Rank matrix file for K_m x K_n");
  verify->add_option("--k", k_str, "Path length bound, or inf")->capture_default_str();
  verify->add_flag("--star", star, "Check star coloring instead");
  verify->add_flag("--allow-long-paths", allow_long, "Permit k > 4 (exponential)");

  auto* solve = app.add_subcommand("solve", "Exact k-ranking number");
  common(solve);
  budget(solve);
  solve->add_option("--k", k_str, "Path length bound, or inf")->capture_default_str();
  solve->add_flag("--star", star, "Solve the star chromatic number");
  solve->add_option("--witness", witness_path, "Write the best ranking found here");
  solve->add_flag("--no-harmonic-seed", no_seed, "Skip the harmonic lower bound on K_m x K_n");

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on chi_2");
  common(bounds);
  budget(bounds);
  bool run_solver = false;
  bounds->add_flag("--solve", run_solver, "Also run the exact solver under the budget");

  auto* experiment = app.add_subcommand("experiment", "chi_2 of random graphs G(n,p)");
  experiment->add_option("--n-values", n_values, "Orders, comma separated")->delimiter(',')->required();
  experiment->add_option("--p", src.p, "Constant edge probability");
  experiment->add_option("--c", c_rule, "Use p = c * sqrt(ln n / n)");
  experiment->add_option("--trials", trials, "Trials per order")->capture_default_str();
  experiment->add_option("--seed", src.seed, "Random seed")->capture_default_str();
  experiment->add_option("--threads", threads, "Worker threads")->capture_default_str();
  experiment->add_option("--out", out_path, "Write CSV here");
  experiment->add_flag("--json", as_json, "Machine-readable summary");
  budget(experiment);

  auto* enumerate = app.add_subcommand("enumerate", "Optimal 2-rankings up to automorphism");
  common(enumerate);
  budget(enumerate);
  enumerate->add_flag("--all", show_all, "Print every class representative");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*construct) {
      Family fam = resolve_graph(src, true);
      std::string method;
      Ranking r = construct_ranking(src, fam, method);
      if (auto bad = verify_k_ranking(fam.graph, r, 2))
        throw ConstructionFailed("construction produced an invalid ranking");  // defensive; never expected
      const std::string data = fam.matrix ? write_matrix(*fam.matrix) : write_ranking(r);
      if (!graph_out.empty()) write_text_file(graph_out, write_graph(fam.graph));
      if (!out_path.empty()) write_text_file(out_path, data);
      if (as_json) {
        json j{{"graph", fam.id}, {"method", method}, {"vertices", fam.graph.order()}, {"edges", fam.graph.size()},
               {"ranks", r.rank_count()}};
        if (fam.matrix) j["matrix"] = matrix_json(*fam.matrix);
        else j["ranking"] = r.ranks();
        out << j.dump() << '\n';
        return 0;
      }
      std::ostream& summary = out_path.empty() ? err : out;
      if (out_path.empty()) out << data;
      summary << fam.id << ": " << r.rank_count() << " ranks (" << method << ", " << fam.graph.order()
              << " vertices)\n";
      return 0;
    }

    if (*verify) {
      Family fam = resolve_graph(src, false);
      if (ranking_path.empty() == matrix_path.empty()) throw UsageError("give exactly one of --ranking or --matrix");
      const int k = parse_k(k_str);
      if (k > 4 && !allow_long) throw UsageError("k > 4 is exponential; pass --allow-long-paths to proceed");
      Ranking r;
      if (!matrix_path.empty()) {
        // Row-major: entry (i, j) is vertex i * cols + j, as for K_m x K_n and C_3 x C_n.
        RankMatrix a = read_matrix(read_text_file(matrix_path));
        if (auto grid = detect_complete_grid(fam.graph))
          r = ranking_from_matrix(a, static_cast<std::size_t>(grid->first), static_cast<std::size_t>(grid->second));
        else
          r = ranking_from_matrix(a);
      } else {
        r = read_ranking(read_text_file(ranking_path));
      }
      if (r.size() != fam.graph.order())
        throw InputError("ranking has " + std::to_string(r.size()) + " vertices, graph has " +
                         std::to_string(fam.graph.order()));
      std::optional<std::vector<Vertex>> path;
      std::string kind = "path";
      if (star) {
        if (auto bad = verify_star_coloring(fam.graph, r)) {
          path = bad->path;
          kind = bad->kind == StarViolation::Kind::improper_edge ? "improper-edge" : "bicolored-p4";
        }
      } else if (auto bad = verify_k_ranking(fam.graph, r, k)) {
        path = bad->path;
      }
      if (as_json) {
        json j{{"graph", fam.id}, {"k", star ? "star" : k_text(k)}, {"ok", !path}, {"ranks", r.rank_count()}};
        if (path) {
          std::vector<int> pr;
          for (Vertex v : *path) pr.push_back(r[v]);
          j["violation"] = {{"kind", kind}, {"path", *path}, {"path_ranks", pr}};
        }
        out << j.dump() << '\n';
      } else if (path) {
        out << "violation (" << kind << "): " << join(*path) << "\n  ranks:";
        for (Vertex v : *path) out << ' ' << r[v];
        out << '\n';
      } else {
        out << "ok: " << (star ? "star coloring" : k_text(k) + "-ranking") << " with " << r.rank_count()
            << " ranks\n";
      }
      return path ? 1 : 0;
    }

    if (*solve) {
      Family fam = resolve_graph(src, false);
      const int k = parse_k(k_str);
      SolveOptions opt{make_budget(budget_nodes, budget_seconds), !no_seed};
      SolveResult res = star ? solve_star_chromatic(fam.graph, opt) : solve_chi_k(fam.graph, k, opt);
      const std::string what = star ? "chi_s" : "chi_" + k_text(k);
      if (!witness_path.empty()) write_text_file(witness_path, write_ranking(res.witness));
      if (as_json) {
        out << json{{"graph", fam.id},         {"objective", what},      {"lower", res.lower},
                    {"upper", res.upper},      {"exact", res.exact()},   {"nodes", res.nodes_explored},
                    {"seconds", res.seconds}}
                   .dump()
            << '\n';
      } else if (res.exact()) {
        out << what << "(" << fam.id << ") = " << res.upper << '\n';
      } else {
        out << what << "(" << fam.id << ") in [" << res.lower << ", " << res.upper << "] (budget exhausted)\n";
      }
      return res.exact() ? 0 : 1;
    }

    if (*bounds) {
      Family fam = resolve_graph(src, true);
      std::optional<Ranking> built;
      std::string method;
      if (!src.family.empty() && src.family != "gnp") built = construct_ranking(src, fam, method);
      std::optional<SolveResult> solved;
      if (run_solver) solved = solve_chi2(fam.graph, {make_budget(budget_nodes, budget_seconds), true});
      BoundReport rep = make_bound_report(fam.id, fam.graph, built, fam.matrix, solved ? &*solved : nullptr);
      if (as_json) {
        json j{{"graph", rep.graph_id}, {"degeneracy_bound", rep.degeneracy_bound}, {"lower", rep.lower()},
               {"consistent", rep.consistent()}};
        if (rep.harmonic)
          j["harmonic"] = {{"numerator", rep.harmonic->exact.numerator()},
                           {"denominator", rep.harmonic->exact.denominator()},
                           {"ranks", rep.harmonic->ranks}};
        if (rep.construction_upper) j["construction_upper"] = *rep.construction_upper;
        if (rep.solver_bracket) j["solver"] = {rep.solver_bracket->first, rep.solver_bracket->second};
        if (rep.upper()) j["upper"] = *rep.upper();
        if (!rep.multiplicity_histogram.empty()) j["multiplicity_histogram"] = rep.multiplicity_histogram;
        out << j.dump() << '\n';
      } else {
        out << "graph: " << rep.graph_id << '\n';
        out << "degeneracy bound: " << rep.degeneracy_bound << '\n';
        if (rep.harmonic)
          out << "harmonic bound: " << rep.harmonic->exact.numerator() << '/' << rep.harmonic->exact.denominator()
              << " -> " << rep.harmonic->ranks << '\n';
        if (rep.construction_upper) out << "construction (" << method << "): " << *rep.construction_upper << '\n';
        if (rep.solver_bracket)
          out << "solver: [" << rep.solver_bracket->first << ", " << rep.solver_bracket->second << "]\n";
        out << "chi_2 in [" << rep.lower() << ", " << (rep.upper() ? std::to_string(*rep.upper()) : "?") << "]\n";
      }
      return rep.consistent() ? 0 : 1;
    }

    if (*experiment) {
      if ((src.p < 0) == (c_rule < 0)) throw UsageError("give exactly one of --p or --c");
      PRule rule = src.p >= 0 ? constant_p(src.p) : sqrt_log_rule(c_rule);
      if (threads < 1) throw UsageError("--threads must be >= 1");
      auto rows = random_chi2_experiment(n_values, rule, trials, src.seed, make_budget(budget_nodes, budget_seconds),
                                         static_cast<unsigned>(threads));
      const std::string csv = experiment_csv(rows);
      int inconsistent = 0, bracketed = 0;
      for (const auto& row : rows) {
        inconsistent += !(row.degeneracy + 1 <= row.chi2_lo && row.chi2_lo <= row.chi2_hi);
        bracketed += row.chi2_lo != row.chi2_hi;
      }
      if (!out_path.empty()) write_text_file(out_path, csv);
      if (as_json) {
        json summary = json::array();
        for (const auto& s : summarize(rows))
          summary.push_back({{"n", s.n}, {"mean_chi2_lo", s.mean_chi2_lo}, {"mean_chi2_hi", s.mean_chi2_hi},
                             {"mean_max_degree", s.mean_max_degree}, {"bracketed", s.bracketed}});
        out << json{{"rows", rows.size()}, {"bracketed", bracketed}, {"inconsistent", inconsistent},
                    {"summary", summary}}
                   .dump()
            << '\n';
      } else {
        std::ostream& summary = out_path.empty() ? err : out;
        if (out_path.empty()) out << csv;
        summary << rows.size() << " samples, " << bracketed << " bracketed, " << inconsistent << " inconsistent\n";
      }
      return inconsistent || bracketed ? 1 : 0;
    }

    if (*enumerate) {
      Family fam = resolve_graph(src, false);
      auto res = enumerate_optimal_chi2(fam.graph, {make_budget(budget_nodes, budget_seconds), true});
      if (as_json) {
        json reps = json::array();
        for (const auto& r : res.representatives) reps.push_back(r.ranks());
        out << json{{"graph", fam.id},
                    {"chi2", res.chi},
                    {"solutions", res.solutions},
                    {"automorphisms", res.automorphism_count},
                    {"classes", res.representatives.size()},
                    {"complete", res.complete},
                    {"representatives", show_all ? reps : json::array()}}
                   .dump()
            << '\n';
      } else {
        out << "chi_2(" << fam.id << ") = " << res.chi << '\n'
            << "optimal rankings: " << res.solutions << '\n'
            << "automorphisms: " << res.automorphism_count << '\n'
            << "classes: " << res.representatives.size() << (res.complete ? "" : " (incomplete)") << '\n';
        if (show_all)
          for (const auto& r : res.representatives) {
            for (std::size_t v = 0; v < r.size(); ++v) out << (v ? " " : "") << r[static_cast<Vertex>(v)];
            out << '\n';
          }
      }
      return res.complete && res.chi > 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {  // ParameterError, InputError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {  // SizeError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConstructionFailed& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace tworank::cli
