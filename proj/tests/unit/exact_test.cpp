#include "groupobs/exact.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "groupobs/errors.hpp"
#include "oracle.hpp"

namespace groupobs {
namespace {

using testing::complete_graph;
using testing::naive_expectation;
using testing::path_graph;
using testing::star_graph;

TEST(SurvivalRatioTest, Values) {
  EXPECT_NEAR(survival_ratio(4, 1, 1), 2.0 / 3.0, 1e-15);  // C(2,1)/C(3,1)
  EXPECT_EQ(survival_ratio(4, 1, 3), 0.0);
  EXPECT_EQ(survival_ratio(100, 0, 42), 1.0);
  EXPECT_THROW(survival_ratio(4, 4, 1), InputError);
  EXPECT_THROW(survival_ratio(4, 1, 4), InputError);
}

TEST(SurvivalRatioTest, NonIncreasingInDegreeAndCount) {
  const std::size_t n = 60;
  for (std::size_t nc = 0; nc < n; ++nc) {
    for (std::size_t d = 0; d + 1 < n; ++d) {
      EXPECT_LE(survival_ratio(n, nc, d + 1), survival_ratio(n, nc, d));
      if (nc + 1 < n) EXPECT_LE(survival_ratio(n, nc + 1, d), survival_ratio(n, nc, d));
    }
  }
}

TEST(SurvivalRatioTest, LargeGraphsDoNotOverflow) {
  const double r = survival_ratio(10'000'000, 100'000, 50);
  EXPECT_GT(r, 0.0);
  EXPECT_LT(r, 1.0);
  // (1 - nc/(n-1))^d is a tight approximation at this scale.
  EXPECT_NEAR(r, std::pow(1.0 - 100'000.0 / 9'999'999.0, 50), 1e-4);
}

TEST(GlobalEdgeTest, Values) {
  const ObservationScope scope(Target::edge, Level::global, 1);
  EXPECT_NEAR(naive_expectation(path_graph(4), scope, 2), 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(exact_global_edge_obs(4, 2), 5.0 / 6.0, 1e-15);
  EXPECT_EQ(exact_global_edge_obs(9, 0), 0.0);
  EXPECT_EQ(exact_global_edge_obs(9, 9), 1.0);
  EXPECT_THROW(exact_global_edge_obs(1, 0), InputError);
  EXPECT_THROW(exact_global_edge_obs(5, 6), InputError);
}

TEST(LocalEdgeTest, Values) {
  const ObservationScope scope(Target::edge, Level::local, 1);
  EXPECT_NEAR(naive_expectation(testing::cycle_graph(5), scope, 2), 0.5, 1e-12);
  EXPECT_NEAR(exact_local_edge_obs(5, 2), 0.5, 1e-15);
  EXPECT_EQ(exact_local_edge_obs(7, 0), 0.0);
  EXPECT_EQ(exact_local_edge_obs(7, 6), 1.0);
  EXPECT_THROW(exact_local_edge_obs(7, 7), DomainError);
}

TEST(NodeObsTest, StarValues) {
  const Graph s = star_graph(4);
  EXPECT_DOUBLE_EQ(exact_node_obs_prob(s, 0, 1), 1.0);
  EXPECT_NEAR(exact_node_obs_prob(s, 1, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(exact_local_node_obs(s, 1), 0.5, 1e-15);
  EXPECT_NEAR(exact_global_node_obs(s, 1), 0.625, 1e-15);

  const ObservationScope local(Target::node, Level::local, 1);
  const ObservationScope global(Target::node, Level::global, 1);
  EXPECT_NEAR(naive_expectation(s, local, 1), 0.5, 1e-12);
  EXPECT_NEAR(naive_expectation(s, global, 1), 0.625, 1e-12);
}

TEST(NodeObsTest, TrivialCases) {
  const Graph isolated = Graph::from_edges(5, std::vector<Edge>{{0, 1}});
  EXPECT_EQ(exact_node_obs_prob(isolated, 4, 3), 0.0);
  EXPECT_DOUBLE_EQ(exact_local_node_obs(complete_graph(8), 3), 1.0);
  EXPECT_DOUBLE_EQ(exact_global_node_obs(complete_graph(8), 1), 1.0);
  EXPECT_EQ(exact_local_node_obs(path_graph(6), 0), 0.0);
  EXPECT_EQ(exact_global_node_obs(path_graph(6), 6), 1.0);
  EXPECT_THROW(exact_local_node_obs(path_graph(6), 6), DomainError);
}

// The printed global closed form: nc/n + (n-nc)/n^2 (|D| + sum over the
// rest of 1 - C(n-1-deg, nc)/C(n-1, nc)), evaluated with exact binomials.
double printed_global_node_form(const Graph& g, std::size_t nc) {
  const std::size_t n = g.node_count();
  auto binom = [](double a, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r = r * (a - double(i)) / double(i + 1);
    return r;
  };
  double inner = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const std::size_t deg = g.degree(u);
    if (deg > n - nc - 1) {
      inner += 1.0;
    } else {
      inner += 1.0 - binom(double(n - 1 - deg), nc) / binom(double(n - 1), nc);
    }
  }
  const double nn = double(n);
  return double(nc) / nn + (nn - double(nc)) / (nn * nn) * inner;
}

TEST(NodeObsTest, MatchesPrintedGlobalFormAndLocalGlobalIdentity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng() % 25;
    const Graph g = testing::coin_flip_graph(n, 0.1 + 0.02 * double(rng() % 30), rng());
    for (std::size_t nc = 0; nc < n; ++nc) {
      const double global = exact_global_node_obs(g, nc);
      const double local = exact_local_node_obs(g, nc);
      EXPECT_NEAR(global, printed_global_node_form(g, nc), 1e-12);
      const double nn = double(n);
      EXPECT_NEAR(global, double(nc) / nn + (nn - double(nc)) / nn * local, 1e-12);
    }
  }
}

TEST(NodeObsTest, DegreeMultisetDeterminesValue) {
  // A 6-cycle and two disjoint triangles are both 2-regular on 6 nodes.
  const Graph cycle = testing::cycle_graph(6);
  const Graph triangles =
      Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  for (std::size_t nc = 0; nc < 6; ++nc) {
    EXPECT_EQ(exact_local_node_obs(cycle, nc), exact_local_node_obs(triangles, nc));
    EXPECT_EQ(exact_global_node_obs(cycle, nc), exact_global_node_obs(triangles, nc));
  }
}

TEST(ExactVsOracleTest, SmallGraphsAllCounts) {
  const std::vector<Graph> graphs{path_graph(5), star_graph(6), testing::cycle_graph(7),
                                  complete_graph(4),
                                  testing::coin_flip_graph_without_isolates(8, 0.35, 2)};
  const ObservationScope ge(Target::edge, Level::global, 1);
  const ObservationScope le(Target::edge, Level::local, 1);
  const ObservationScope gn(Target::node, Level::global, 1);
  const ObservationScope ln(Target::node, Level::local, 1);
  for (const Graph& g : graphs) {
    const std::size_t n = g.node_count();
    for (std::size_t nc = 0; nc <= n; ++nc) {
      EXPECT_NEAR(exact_global_edge_obs(n, nc), naive_expectation(g, ge, nc), 1e-9);
      EXPECT_NEAR(exact_global_node_obs(g, nc), naive_expectation(g, gn, nc), 1e-9);
      if (nc < n) {
        EXPECT_NEAR(exact_local_edge_obs(n, nc), naive_expectation(g, le, nc), 1e-9);
        EXPECT_NEAR(exact_local_node_obs(g, nc), naive_expectation(g, ln, nc), 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace groupobs
