#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tworank/graph.hpp"
#include "tworank/graph_io.hpp"
#include "tworank/isomorphism.hpp"

using namespace tworank;

namespace {

bool is_regular(const Graph& g, std::size_t d) { return g.min_degree() == d && g.max_degree() == d; }

}  // namespace

TEST(Hypercube, SmallCases) {
  Graph q0 = hypercube(0);
  EXPECT_EQ(q0.order(), 1u);
  EXPECT_EQ(q0.size(), 0u);

  Graph q2 = hypercube(2);
  EXPECT_EQ(q2.order(), 4u);
  EXPECT_EQ(q2.size(), 4u);
  EXPECT_TRUE(isomorphic(q2, cycle(4)));

  Graph q4 = hypercube(4);
  EXPECT_EQ(q4.order(), 16u);
  EXPECT_EQ(q4.size(), 32u);
  EXPECT_TRUE(is_regular(q4, 4));
}

TEST(Hypercube, EdgesJoinIdsDifferingInOneBit) {
  Graph q = hypercube(5);
  for (auto [u, v] : q.edges()) EXPECT_EQ(std::popcount(static_cast<unsigned>(u ^ v)), 1);
}

TEST(Hypercube, RegularWithExpectedEdgeCount) {
  for (int d = 0; d <= 12; ++d) {
    Graph q = hypercube(d);
    EXPECT_TRUE(is_regular(q, static_cast<std::size_t>(d))) << d;
    EXPECT_EQ(q.size(), static_cast<std::size_t>(d) * (std::size_t{1} << d) / 2) << d;
  }
}

TEST(Hypercube, DimensionLimits) {
  EXPECT_THROW(hypercube(31), SizeError);
  EXPECT_THROW(hypercube(-1), SizeError);
}

TEST(Families, CompleteCyclePath) {
  EXPECT_EQ(complete(3).size(), 3u);
  EXPECT_EQ(complete(1).size(), 0u);
  EXPECT_EQ(path(2).size(), 1u);
  EXPECT_EQ(path(1).order(), 1u);
  EXPECT_TRUE(isomorphic(cycle(4), hypercube(2)));
  EXPECT_THROW(cycle(2), ParameterError);
  EXPECT_THROW(complete(0), ParameterError);
}

TEST(Families, Petersen) {
  Graph g = petersen();
  EXPECT_EQ(g.order(), 10u);
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_EQ(girth(g), 5);
  EXPECT_TRUE(is_connected(g));
}

TEST(Families, Heawood) {
  Graph g = heawood();
  EXPECT_EQ(g.order(), 14u);
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_EQ(girth(g), 6);
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_TRUE(is_connected(g));
}

TEST(Families, WagnerC8Antipodal) {
  Graph g = wagner_c8_antipodal();
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.size(), 12u);
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_TRUE(is_connected(g));
}

TEST(CartesianProduct, C4xC4IsQ4) {
  Graph g = cartesian_product(cycle(4), cycle(4));
  EXPECT_TRUE(isomorphic(g, hypercube(4)));
}

TEST(CartesianProduct, SmallProducts) {
  EXPECT_TRUE(isomorphic(cartesian_product(complete(2), complete(2)), cycle(4)));
  Graph k3k3 = cartesian_product(complete(3), complete(3));
  EXPECT_EQ(k3k3.order(), 9u);
  EXPECT_EQ(k3k3.size(), 18u);  // 3 * 3 + 3 * 3
  EXPECT_TRUE(is_regular(k3k3, 4));
}

TEST(CartesianProduct, RowMajorIdsAndLabels) {
  Graph g = cartesian_product(path(2), cycle(3));
  EXPECT_EQ(g.label(4), "(1,1)");
  EXPECT_TRUE(g.adjacent(1, 4));   // (0,1) ~ (1,1)
  EXPECT_TRUE(g.adjacent(3, 5));   // (1,0) ~ (1,2)
  EXPECT_FALSE(g.adjacent(0, 4));  // differs in both coordinates
  EXPECT_EQ(cartesian_product(g, path(2)).label(0), "((0,0),0)");
}

TEST(CartesianProduct, CommutativeUpToIsomorphism) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 3);
    Graph g = corpus::random_graph(a, 0.6, rng), h = corpus::random_graph(b, 0.6, rng);
    ASSERT_LE(a * b, 12);
    EXPECT_TRUE(isomorphic(cartesian_product(g, h), cartesian_product(h, g)));
  }
}

TEST(DistancePower, Examples) {
  EXPECT_TRUE(isomorphic(distance_power(path(3), 2), complete(3)));
  Graph c6sq = distance_power(cycle(6), 2);
  EXPECT_EQ(c6sq.order(), 6u);
  EXPECT_TRUE(is_regular(c6sq, 4));
  EXPECT_THROW(distance_power(cycle(5), 0), ParameterError);
}

TEST(DistancePower, MatchesFloydOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = corpus::random_graph(12, 0.2, rng);
    auto d = oracle::floyd_distances(g);
    for (int k = 1; k <= 3; ++k) {
      Graph p = distance_power(g, k);
      for (Vertex u = 0; u < 12; ++u)
        for (Vertex v = 0; v < 12; ++v)
          EXPECT_EQ(p.adjacent(u, v), u != v && d[u][v] >= 1 && d[u][v] <= k);
    }
    EXPECT_EQ(distance_power(g, 1), g);
  }
}

TEST(Distances, SymmetricWithTriangleInequality) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 41);
    Graph g = corpus::random_graph(n, 3.0 / n, rng);
    std::vector<std::vector<int>> d;
    for (Vertex s = 0; s < n; ++s) d.push_back(bfs_distances(g, s));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        EXPECT_EQ(d[u][v], d[v][u]);
        for (int w = 0; w < n; w += 7)
          if (d[u][w] >= 0 && d[w][v] >= 0) EXPECT_LE(d[u][v], d[u][w] + d[w][v]);
      }
  }
}

TEST(GraphConstruction, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
}

TEST(EdgeListFormat, ReadsTriangle) {
  Graph g = read_graph("3 3\n0 1\n1 2\n0 2");
  EXPECT_TRUE(isomorphic(g, complete(3)));
  EXPECT_EQ(g, complete(3));
}

TEST(EdgeListFormat, WriterNormalizes) {
  Graph g = read_graph("4 3\n3 1\n2 0\n1 0\n");
  EXPECT_EQ(write_graph(g), "4 3\n0 1\n0 2\n1 3\n");
  EXPECT_EQ(read_graph(write_graph(g)), g);
}

TEST(EdgeListFormat, RoundTripOnFamilies) {
  for (const Graph& g : {petersen(), heawood(), hypercube(5), cartesian_product(cycle(3), cycle(7))}) {
    std::string text = write_graph(g);
    EXPECT_EQ(write_graph(read_graph(text)), text);
  }
}

TEST(EdgeListFormat, ErrorsCarryLineNumbers) {
  try {
    read_graph("2 1\n0 0");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    read_graph("3 2\n0 1\n1 0\n");
    FAIL() << "duplicate accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(read_graph("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(read_graph("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(read_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(read_graph("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(read_graph("3\n"), ParseError);
  EXPECT_THROW(read_graph(""), ParseError);
}

TEST(Isomorphism, DistinguishesCubicGraphsOnEight) {
  EXPECT_FALSE(isomorphic(wagner_c8_antipodal(), hypercube(3)));
  EXPECT_TRUE(isomorphic(petersen(), petersen()));
  EXPECT_EQ(automorphisms(hypercube(3)).size(), 48u);
  EXPECT_EQ(automorphisms(petersen()).size(), 120u);
}

TEST(Corpus, CubicGraphCountsMatchKnownValues) {
  EXPECT_EQ(corpus::cubic_graphs(4).size(), 1u);
  EXPECT_EQ(corpus::cubic_graphs(6).size(), 2u);
  EXPECT_EQ(corpus::cubic_graphs(8).size(), 6u);
}
