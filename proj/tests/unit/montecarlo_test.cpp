#include "groupobs/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "groupobs/errors.hpp"
#include "groupobs/exact.hpp"
#include "groupobs/generators.hpp"
#include "oracle.hpp"

namespace groupobs {
namespace {

using testing::path_graph;
using testing::star_graph;

std::vector<ObservationScope> all_scopes(std::uint32_t hops) {
  return {ObservationScope(Target::edge, Level::global, hops),
          ObservationScope(Target::edge, Level::local, hops),
          ObservationScope(Target::node, Level::global, hops),
          ObservationScope(Target::node, Level::local, hops)};
}

TEST(SampleCompromisedTest, Endpoints) {
  EXPECT_TRUE(sample_compromised(5, 0, 9).empty());
  EXPECT_EQ(sample_compromised(5, 5, 9), NodeSet({0, 1, 2, 3, 4}));
  EXPECT_THROW(sample_compromised(5, 6, 9), InputError);
}

TEST(SampleCompromisedTest, DeterministicPerSeed) {
  EXPECT_EQ(sample_compromised(1000, 37, 123), sample_compromised(1000, 37, 123));
  EXPECT_NE(sample_compromised(1000, 37, 123), sample_compromised(1000, 37, 124));
  EXPECT_EQ(sample_compromised(1000, 37, 5).size(), 37u);
}

TEST(SampleCompromisedTest, InclusionFrequencyIsUniform) {
  const std::size_t n = 100, nc = 10, draws = 50'000;
  std::vector<std::size_t> hits(n, 0);
  for (std::size_t t = 0; t < draws; ++t) {
    for (NodeId u : sample_compromised(n, nc, mix_seed(77, t))) ++hits[u];
  }
  for (std::size_t u = 0; u < n; ++u) {
    EXPECT_NEAR(double(hits[u]) / double(draws), 0.1, 0.005) << "node " << u;
  }
}

TEST(SampleCompromisedTest, EverySubsetEquiprobable) {
  // 10 subsets of size 2 from 5 nodes; each expected 10% of draws.
  const std::size_t draws = 100'000;
  std::map<std::vector<NodeId>, std::size_t> counts;
  for (std::size_t t = 0; t < draws; ++t) {
    const NodeSet s = sample_compromised(5, 2, mix_seed(1, t));
    ++counts[{s.begin(), s.end()}];
  }
  ASSERT_EQ(counts.size(), 10u);
  const double sigma = std::sqrt(0.1 * 0.9 / double(draws));
  for (const auto& [subset, c] : counts) {
    EXPECT_NEAR(double(c) / double(draws), 0.1, 5 * sigma);
  }
}

TEST(RealizedMetricTest, Examples) {
  EXPECT_DOUBLE_EQ(realized_metric(path_graph(4), NodeSet({0, 2}),
                                   ObservationScope(Target::edge, Level::global, 1)),
                   1.0);
  EXPECT_DOUBLE_EQ(realized_metric(path_graph(3), NodeSet({0}),
                                   ObservationScope(Target::node, Level::global, 2)),
                   1.0);
  EXPECT_DOUBLE_EQ(realized_metric(path_graph(3), NodeSet({1}),
                                   ObservationScope(Target::edge, Level::local, 1)),
                   1.0);
}

TEST(RealizedMetricTest, DomainErrors) {
  const ObservationScope local(Target::node, Level::local, 1);
  EXPECT_THROW(realized_metric(path_graph(3), NodeSet({0, 1, 2}), local), DomainError);
  EXPECT_THROW(realized_metric(Graph::from_edges(3, {}), NodeSet({0}),
                               ObservationScope(Target::edge, Level::global, 1)),
               DomainError);
  EXPECT_THROW(ObservationScope(Target::edge, Level::global, 0), InputError);
}

TEST(RealizedMetricTest, LocalEdgeIgnoresIsolatedNodes) {
  // Node 3 is isolated; node 2 sees 1 of its 1 edge; node 1 compromised.
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_DOUBLE_EQ(
      realized_metric(g, NodeSet({1}), ObservationScope(Target::edge, Level::local, 1)), 1.0);
  // Only isolated nodes remain uncompromised.
  const Graph h = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  EXPECT_DOUBLE_EQ(
      realized_metric(h, NodeSet({0, 1}), ObservationScope(Target::edge, Level::local, 1)), 0.0);
}

// Property: the kernel agrees with the distance-matrix definitions, and
// realizations are non-decreasing in the hop count.
TEST(RealizedMetricTest, MatchesDefinitionsAndIsMonotoneInHops) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = testing::coin_flip_graph(n, 0.1 + 0.05 * double(rng() % 10), rng());
    if (g.edge_count() == 0) continue;
    const auto d = testing::all_pairs_distances(g);
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 2);  // never all nodes
    std::vector<NodeId> members;
    for (NodeId u = 0; u < n; ++u)
      if ((mask >> u) & 1U) members.push_back(u);
    const NodeSet compromised(members);
    for (int s = 0; s < 4; ++s) {
      double previous = -1.0;
      for (std::uint32_t k = 1; k <= 4; ++k) {
        const ObservationScope scope = all_scopes(k)[s];
        const double got = realized_metric(g, compromised, scope);
        EXPECT_NEAR(got, testing::naive_realized(g, d, mask, scope), 1e-12)
            << scope.describe() << " n=" << n;
        EXPECT_GE(got, previous - 1e-15);
        previous = got;
      }
    }
  }
}

TEST(BruteForceTest, Examples) {
  EXPECT_NEAR(brute_force_metric(path_graph(4), ObservationScope(Target::edge, Level::global, 1), 2),
              5.0 / 6.0, 1e-15);
  EXPECT_NEAR(brute_force_metric(star_graph(4), ObservationScope(Target::node, Level::global, 1), 1),
              0.625, 1e-15);
  EXPECT_DOUBLE_EQ(brute_force_metric(testing::complete_graph(3),
                                      ObservationScope(Target::node, Level::local, 1), 1),
                   1.0);
}

TEST(BruteForceTest, BudgetGuard) {
  const Graph g = path_graph(40);
  EXPECT_THROW(brute_force_metric(g, ObservationScope(Target::node, Level::global, 1), 20),
               ResourceError);
  EXPECT_NO_THROW(brute_force_metric(g, ObservationScope(Target::node, Level::global, 1), 2));
}

TEST(BruteForceTest, AgreesWithBitmaskOracleAcrossHops) {
  const std::vector<Graph> graphs{path_graph(6), star_graph(7), testing::cycle_graph(8),
                                  testing::coin_flip_graph(9, 0.25, 42)};
  for (const Graph& g : graphs) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (const auto& scope : all_scopes(k)) {
        for (std::size_t nc = 0; nc < g.node_count(); ++nc) {
          EXPECT_NEAR(brute_force_metric(g, scope, nc), testing::naive_expectation(g, scope, nc),
                      1e-12);
        }
      }
    }
  }
}

TEST(BruteForceTest, GlobalScopesNonDecreasingInCount) {
  const std::vector<Graph> graphs{path_graph(7), star_graph(6),
                                  testing::coin_flip_graph(9, 0.3, 8)};
  for (const Graph& g : graphs) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (Target t : {Target::edge, Target::node}) {
        const ObservationScope scope(t, Level::global, k);
        double previous = -1.0;
        for (std::size_t nc = 0; nc <= g.node_count(); ++nc) {
          const double v = brute_force_metric(g, scope, nc);
          EXPECT_GE(v, previous - 1e-12);
          previous = v;
        }
      }
    }
  }
}

TEST(McEstimateTest, ZeroCompromisedIsExactlyZero) {
  const Graph g = path_graph(10);
  for (const auto& scope : all_scopes(2)) {
    const McEstimate est = mc_estimate(g, scope, 0, 50, 1);
    EXPECT_EQ(est.mean, 0.0);
    EXPECT_EQ(est.standard_error, 0.0);
    EXPECT_EQ(est.trials, 50u);
  }
}

TEST(McEstimateTest, ErrorsPropagate) {
  const Graph g = path_graph(5);
  EXPECT_THROW(mc_estimate(g, ObservationScope(Target::node, Level::local, 1), 5, 10, 1),
               DomainError);
  EXPECT_THROW(mc_estimate(g, ObservationScope(Target::node, Level::global, 1), 6, 10, 1),
               InputError);
  EXPECT_THROW(mc_estimate(g, ObservationScope(Target::node, Level::global, 1), 1, 0, 1),
               InputError);
  EXPECT_EQ(mc_estimate(g, ObservationScope(Target::node, Level::global, 1), 1, 1, 1)
                .standard_error,
            0.0);
}

TEST(McEstimateTest, BitIdenticalAcrossWorkerCounts) {
  const Graph g = gen_ba(300, 2, 17);
  for (const auto& scope : all_scopes(2)) {
    const McEstimate one = mc_estimate(g, scope, 30, 257, 99, 1);
    for (unsigned w : {2u, 3u, 8u}) {
      const McEstimate many = mc_estimate(g, scope, 30, 257, 99, w);
      EXPECT_EQ(one.mean, many.mean);
      EXPECT_EQ(one.standard_error, many.standard_error);
    }
  }
}

TEST(McEstimateTest, MatchesClosedFormsAtPaperScale) {
  const Graph er = gen_er(250, 0.015, 4);
  const McEstimate ge = mc_estimate(er, ObservationScope(Target::edge, Level::global, 1), 25, 500, 7);
  EXPECT_NEAR(exact_global_edge_obs(250, 25), 0.19036, 5e-6);
  EXPECT_LE(std::abs(ge.mean - exact_global_edge_obs(250, 25)), 3 * ge.standard_error);

  const Graph ws = gen_ws(250, 4, 0.2, 4);  // no isolated nodes: ring degree 4 preserved at u
  ASSERT_FALSE(testing::has_isolated_node(ws));
  const McEstimate le = mc_estimate(ws, ObservationScope(Target::edge, Level::local, 1), 25, 500, 7);
  EXPECT_NEAR(exact_local_edge_obs(250, 25), 0.10040, 5e-6);
  EXPECT_LE(std::abs(le.mean - exact_local_edge_obs(250, 25)), 3 * le.standard_error);
}

TEST(McEstimateTest, AgreesWithBruteForceOnSmallGraphs) {
  const std::vector<Graph> graphs{path_graph(6), star_graph(7), testing::cycle_graph(9),
                                  testing::coin_flip_graph(10, 0.3, 21)};
  std::uint64_t seed = 1000;
  for (const Graph& g : graphs) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (const auto& scope : all_scopes(k)) {
        for (std::size_t nc : {std::size_t{1}, g.node_count() / 2, g.node_count() - 1}) {
          const double exact = brute_force_metric(g, scope, nc);
          const McEstimate est = mc_estimate(g, scope, nc, 20'000, ++seed);
          // Degenerate (zero-variance) cases must match exactly.
          EXPECT_LE(std::abs(est.mean - exact), 4 * est.standard_error + 1e-12)
              << scope.describe() << " nc=" << nc;
        }
      }
    }
  }
}

TEST(MixSeedTest, DistinctStreams) {
  EXPECT_NE(mix_seed(0, 0), mix_seed(0, 1));
  EXPECT_NE(mix_seed(0, 0), mix_seed(1, 0));
  EXPECT_EQ(mix_seed(12, 34), mix_seed(12, 34));
}

}  // namespace
}  // namespace groupobs
