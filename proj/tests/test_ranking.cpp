#include <gtest/gtest.h>

#include <random>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tworank/constructors.hpp"
#include "tworank/ranking.hpp"

using namespace tworank;

TEST(VerifyKRanking, PathOnThreeVertices) {
  EXPECT_FALSE(verify_k_ranking(path(3), Ranking({1, 2, 1}), 2));
  auto bad = verify_k_ranking(path(3), Ranking({2, 1, 2}), 2);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->path, (std::vector<Vertex>{0, 1, 2}));
  // Length-1 paths alone do not see it.
  EXPECT_FALSE(verify_k_ranking(path(3), Ranking({2, 1, 2}), 1));
}

TEST(VerifyKRanking, EqualInteriorIsNotHigher) {
  auto bad = verify_k_ranking(path(4), Ranking({2, 1, 2, 3}), 2);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->path.size(), 3u);
  EXPECT_TRUE(verify_k_ranking(path(3), Ranking({2, 2, 2}), 2));
}

TEST(VerifyKRanking, ReportsShortestViolation) {
  // 0-1-2-3 with ranks 3,1,2,3: the length-3 path 0..3 fails, nothing shorter does.
  Ranking r({3, 1, 2, 3});
  EXPECT_FALSE(verify_k_ranking(path(4), r, 2));
  auto bad = verify_k_ranking(path(4), r, 3);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->path, (std::vector<Vertex>{0, 1, 2, 3}));
  auto edge = verify_k_ranking(path(4), Ranking({1, 1, 2, 1}), 3);
  ASSERT_TRUE(edge);
  EXPECT_EQ(edge->path.size(), 2u);
}

TEST(VerifyKRanking, HypercubeConstructionPasses) {
  EXPECT_FALSE(verify_k_ranking(hypercube(4), rank_hypercube(4), 2));
}

TEST(VerifyKRanking, InputErrors) {
  EXPECT_THROW(verify_k_ranking(path(3), Ranking({1, 2}), 2), InputError);
  EXPECT_THROW(verify_k_ranking(path(3), Ranking({1, 2, 1}), 0), InputError);
  EXPECT_THROW(Ranking({1, 0, 2}), InputError);
}

TEST(VerifyKRanking, ViolationsReplayAgainstDefinition) {
  std::mt19937_64 rng(21);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g = corpus::random_graph(n, 0.4, rng);
    std::vector<int> ranks(n);
    for (int& x : ranks) x = 1 + static_cast<int>(rng() % 4);
    for (int k : {1, 2, 3, kUnbounded}) {
      auto bad = verify_k_ranking(g, Ranking(ranks), k);
      if (!bad) continue;
      ++seen;
      const auto& p = bad->path;
      ASSERT_GE(p.size(), 2u);
      EXPECT_LE(static_cast<long long>(p.size()) - 1, static_cast<long long>(k));
      for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i], p[i + 1]));
      std::vector<Vertex> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      EXPECT_FALSE(oracle::well_ranked(p, ranks));
    }
  }
  EXPECT_GT(seen, 100);
}

TEST(VerifyKRanking, AgreesWithAllPathsEnumerator) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    Graph g = corpus::random_graph(n, 0.1 + 0.1 * static_cast<double>(rng() % 6), rng);
    std::vector<int> ranks(n);
    const int spread = 1 + static_cast<int>(rng() % n);
    for (int& x : ranks) x = 1 + static_cast<int>(rng() % spread);
    for (int k : {1, 2, 3, 4, kUnbounded}) {
      const int cap = k == kUnbounded ? n : k;
      EXPECT_EQ(!verify_k_ranking(g, Ranking(ranks), k).has_value(), oracle::naive_is_k_ranking(g, ranks, cap))
          << "trial " << trial << " k " << k;
    }
  }
}

TEST(VerifyKRanking, PassingAtKPassesBelow) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = corpus::random_graph(n, 0.35, rng);
    std::vector<int> ranks(n);
    for (int& x : ranks) x = 1 + static_cast<int>(rng() % n);
    for (int k = 4; k >= 2; --k)
      if (is_k_ranking(g, Ranking(ranks), k))
        for (int j = 1; j < k; ++j) EXPECT_TRUE(is_k_ranking(g, Ranking(ranks), j));
  }
}

TEST(StarColoring, PathOnFourVertices) {
  auto bad = verify_star_coloring(path(4), Ranking({1, 2, 1, 2}));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->kind, StarViolation::Kind::bicolored_p4);
  EXPECT_EQ(bad->path.size(), 4u);
  EXPECT_FALSE(verify_star_coloring(path(4), Ranking({1, 2, 3, 1})));
}

TEST(StarColoring, ImproperEdgeFirst) {
  auto bad = verify_star_coloring(path(3), Ranking({1, 1, 2}));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->kind, StarViolation::Kind::improper_edge);
  EXPECT_THROW(verify_star_coloring(path(3), Ranking({1, 2})), InputError);
}

TEST(StarColoring, TwoRankingsAreStarColorings) {
  EXPECT_FALSE(verify_star_coloring(hypercube(3), rank_hypercube(3)));
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Graph g = corpus::random_graph(n, 0.4, rng);
    std::vector<int> ranks(n);
    for (int& x : ranks) x = 1 + static_cast<int>(rng() % n);
    if (!is_k_ranking(g, Ranking(ranks), 2)) continue;
    ++checked;
    EXPECT_FALSE(verify_star_coloring(g, Ranking(ranks)));
    EXPECT_TRUE(oracle::naive_is_star_coloring(g, ranks));
  }
  EXPECT_GT(checked, 50);
}

TEST(StarColoring, AgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = corpus::random_graph(n, 0.4, rng);
    std::vector<int> colors(n);
    for (int& x : colors) x = 1 + static_cast<int>(rng() % 4);
    EXPECT_EQ(!verify_star_coloring(g, Ranking(colors)).has_value(), oracle::naive_is_star_coloring(g, colors));
  }
}

TEST(RankMatrix, SeedMatrixIsAThreeRankRanking) {
  RankMatrix seed{{1, 0}, {0, 2}};
  Ranking r = ranking_from_matrix(seed, 2, 2);
  EXPECT_EQ(r.rank_count(), 3u);
  EXPECT_FALSE(verify_k_ranking(complete_grid(2, 2), r, 2));
  EXPECT_FALSE(check_matrix_ranking(seed));
}

TEST(RankMatrix, SingleRowNeedsDistinctEntries) {
  RankMatrix row{{1, 2, 3, 4, 5}};
  EXPECT_FALSE(verify_k_ranking(complete_grid(1, 5), ranking_from_matrix(row), 2));
  EXPECT_TRUE(check_matrix_ranking(RankMatrix{{1, 2, 1}}));
}

TEST(RankMatrix, EqualCornersNeedHigherOpposites) {
  RankMatrix bad{{1, 2}, {2, 1}};
  EXPECT_TRUE(verify_k_ranking(complete_grid(2, 2), ranking_from_matrix(bad), 2));
  auto v = check_matrix_ranking(bad);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, MatrixViolation::Kind::corner);
}

TEST(RankMatrix, DimensionErrors) {
  EXPECT_THROW(ranking_from_matrix(RankMatrix{{1, 0}, {0, 2}}, 2, 3), InputError);
  EXPECT_THROW(RankMatrix::from_rows({{1, 2}, {3}}), InputError);
  EXPECT_THROW(ranking_from_matrix(RankMatrix{{-1}}), InputError);
}

// The matrix condition and the graph verifier are independent routes to the same answer.
TEST(RankMatrix, MatrixCheckerAgreesWithGraphVerifier) {
  std::mt19937_64 rng(23);
  int valid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 4);
    std::vector<int> entries(m * n);
    const int spread = std::max(m, n) + static_cast<int>(rng() % 4);
    for (int& x : entries) x = static_cast<int>(rng() % spread);
    RankMatrix a(m, n, entries);
    const bool by_matrix = !check_matrix_ranking(a);
    const bool by_graph = is_k_ranking(complete_grid(m, n), ranking_from_matrix(a), 2);
    EXPECT_EQ(by_matrix, by_graph);
    valid += by_matrix;
  }
  EXPECT_GT(valid, 100);
}

TEST(TextFormats, RankingRoundTrip) {
  Ranking r = rank_hypercube(3);
  EXPECT_EQ(read_ranking(write_ranking(r)), r);
  EXPECT_EQ(write_ranking(Ranking({2, 1})), "0 2\n1 1\n");
  EXPECT_EQ(read_ranking("1 5\n0 3\n"), Ranking({3, 5}));
}

TEST(TextFormats, RankingErrors) {
  EXPECT_THROW(read_ranking("0 1\n2 1\n"), ParseError);  // vertex 1 missing
  EXPECT_THROW(read_ranking("0 1\n0 2\n"), ParseError);
  EXPECT_THROW(read_ranking("0 0\n"), ParseError);
  EXPECT_THROW(read_ranking("0\n"), ParseError);
}

TEST(TextFormats, MatrixRoundTrip) {
  RankMatrix a = rank_km_factorial(3);
  EXPECT_EQ(read_matrix(write_matrix(a)), a);
  EXPECT_THROW(read_matrix("1 2\n3\n"), ParseError);
}
