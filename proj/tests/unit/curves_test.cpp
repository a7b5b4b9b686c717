#include "groupobs/curves.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "groupobs/errors.hpp"
#include "groupobs/exact.hpp"
#include "groupobs/generators.hpp"

namespace groupobs {
namespace {

std::vector<std::size_t> full_grid(std::size_t last) {
  std::vector<std::size_t> g(last + 1);
  for (std::size_t i = 0; i <= last; ++i) g[i] = i;
  return g;
}

TEST(DefaultGridTest, TwentyOnePointsDeduplicated) {
  const auto g = default_grid(250, kDefaultGridPoints, Level::global);
  ASSERT_EQ(g.size(), 21u);
  EXPECT_EQ(g.front(), 0u);
  EXPECT_EQ(g.back(), 250u);
  const auto local = default_grid(250, kDefaultGridPoints, Level::local);
  EXPECT_EQ(local.back(), 249u);
  EXPECT_EQ(default_grid(4, 21, Level::global), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(AuocTest, BaselinesAndErrors) {
  EXPECT_DOUBLE_EQ(auoc(make_curve({{0, 0, 0}, {0.5, 0.5, 0}, {1, 1, 0}})), 0.5);
  EXPECT_DOUBLE_EQ(auoc(make_curve({{0, 1, 0}, {1, 1, 0}})), 1.0);
  EXPECT_THROW(auoc(make_curve({{0, 0, 0}})), InputError);
  EXPECT_THROW(auoc(make_curve({{0, 0, 0}, {0, 1, 0}})), InputError);
}

TEST(AuocTest, PartialGridIsRenormalized) {
  // value = x on [0, 0.5] only: mean value over the covered span is 0.25.
  EXPECT_DOUBLE_EQ(auoc(make_curve({{0, 0, 0}, {0.25, 0.25, 0}, {0.5, 0.5, 0}})), 0.25);
}

TEST(AuocTest, DominatingCurveHasLargerArea) {
  const auto low = make_curve({{0, 0, 0}, {0.3, 0.2, 0}, {0.7, 0.6, 0}, {1, 1, 0}});
  const auto high = make_curve({{0, 0, 0}, {0.3, 0.5, 0}, {0.7, 0.6, 0}, {1, 1, 0}});
  EXPECT_GE(auoc(high), auoc(low));
}

TEST(AuocTest, StandardErrorPropagatesWeights) {
  // Two points on [0, 1]: weights 1/2 each.
  const auto c = make_curve({{0, 0.2, 0.03}, {1, 0.8, 0.04}});
  EXPECT_NEAR(auoc_standard_error(c), std::sqrt(0.25 * 0.0009 + 0.25 * 0.0016), 1e-15);
}

TEST(BuildCurveTest, GlobalEdgeClosedForm) {
  const Graph g = gen_er(40, 0.1, 3);
  const std::vector<std::size_t> grid{0, 20, 40};
  const auto c = build_curve(g, ObservationScope(Target::edge, Level::global, 1), grid, {});
  ASSERT_EQ(c.points.size(), 3u);
  EXPECT_EQ(c.points[0].value, 0.0);
  EXPECT_NEAR(c.points[1].value, 1.0 - 0.5 * (19.0 / 39.0), 1e-15);
  EXPECT_EQ(c.points[2].value, 1.0);
  for (const auto& p : c.points) EXPECT_EQ(p.standard_error, 0.0);
}

TEST(BuildCurveTest, StarLocalNodeMonteCarlo) {
  const Graph star = testing::star_graph(4);
  const std::vector<std::size_t> grid{0, 1};
  CurveOptions opts;
  opts.trials = 20'000;
  opts.seed = 3;
  const auto c = build_curve(star, ObservationScope(Target::node, Level::local, 1), grid, opts);
  EXPECT_EQ(c.points[0].value, 0.0);
  EXPECT_NEAR(c.points[1].value, 0.5, 4 * c.points[1].standard_error);
}

TEST(BuildCurveTest, SinglePointGrid) {
  const std::vector<std::size_t> grid{0};
  const auto c = build_curve(testing::path_graph(5), ObservationScope(Target::edge, Level::global, 1),
                             grid, {});
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_EQ(c.points[0].x, 0.0);
  EXPECT_EQ(c.points[0].value, 0.0);
}

TEST(BuildCurveTest, RejectsUnsortedOrInvalidGrid) {
  const Graph g = testing::path_graph(5);
  const ObservationScope local(Target::node, Level::local, 1);
  const std::vector<std::size_t> unsorted{2, 1};
  EXPECT_THROW(build_curve(g, local, unsorted, {}), InputError);
  const std::vector<std::size_t> all{0, 5};
  EXPECT_THROW(build_curve(g, local, all, {}), DomainError);
}

// Closed-form AUOC constants: (2n/3 - 1/2)/(n-1) for global edge and
// n/(2(n-1)) for local edge, whose last defined point is nc = n-1.
TEST(ExactCurveAuocTest, MatchesAnalyticConstants) {
  for (std::size_t n : {50u, 250u, 1000u}) {
    const Graph g = testing::path_graph(n);
    const auto global = build_curve(g, ObservationScope(Target::edge, Level::global, 1),
                                    full_grid(n), {});
    const double nn = double(n);
    EXPECT_NEAR(auoc(global), (2.0 * nn / 3.0 - 0.5) / (nn - 1.0), n == 250 ? 1e-4 : 1e-3);

    const auto local = build_curve(g, ObservationScope(Target::edge, Level::local, 1),
                                   full_grid(n - 1), {});
    EXPECT_DOUBLE_EQ(local.extent, 1.0);
    EXPECT_NEAR(auoc(local), nn / (2.0 * (nn - 1.0)), 1e-6);

    // The 21-point default grid stays within 1e-3 of both constants.
    const auto g21 = build_curve(g, ObservationScope(Target::edge, Level::global, 1),
                                 default_grid(n, 21, Level::global), {});
    EXPECT_NEAR(auoc(g21), (2.0 * nn / 3.0 - 0.5) / (nn - 1.0), 1e-3);
    const auto l21 = build_curve(g, ObservationScope(Target::edge, Level::local, 1),
                                 default_grid(n, 21, Level::local), {});
    EXPECT_NEAR(auoc(l21), nn / (2.0 * (nn - 1.0)), 1e-6);
  }
}

TEST(BuildCurveTest, HopCurvesDominatePointwise) {
  const Graph g = gen_ba(250, 2, 12);
  const auto grid = default_grid(250, 11, Level::global);
  CurveOptions opts;
  opts.trials = 200;
  opts.seed = 5;
  for (Target t : {Target::edge, Target::node}) {
    const auto k1 = build_curve(g, ObservationScope(t, Level::global, 1), grid, opts);
    const auto k2 = build_curve(g, ObservationScope(t, Level::global, 2), grid, opts);
    const auto k3 = build_curve(g, ObservationScope(t, Level::global, 3), grid, opts);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (t == Target::node) {
        // Same seeds give the same compromised sets across hop counts.
        EXPECT_LE(k1.points[i].value, k2.points[i].value);
      } else {
        EXPECT_LE(k1.points[i].value,
                  k2.points[i].value + 4 * k2.points[i].standard_error);
      }
      EXPECT_LE(k2.points[i].value, k3.points[i].value);
    }
    EXPECT_GT(auoc(k2), auoc(k1));
  }
}

TEST(BuildCurveTest, GlobalCurvesNonDecreasingOnOracleGraphs) {
  for (const Graph& g : {testing::path_graph(8), testing::star_graph(9), testing::cycle_graph(10)}) {
    const auto grid = full_grid(g.node_count());
    CurveOptions opts;
    opts.trials = 3000;
    for (Target t : {Target::edge, Target::node}) {
      const auto c = build_curve(g, ObservationScope(t, Level::global, 2), grid, opts);
      for (std::size_t i = 1; i < c.points.size(); ++i) {
        EXPECT_GE(c.points[i].value + 4 * (c.points[i].standard_error +
                                           c.points[i - 1].standard_error),
                  c.points[i - 1].value);
      }
    }
  }
}

TEST(CurveIoTest, CsvUsesSixSignificantDigits) {
  auto c = make_curve({{0, 0, 0}, {1.0 / 3.0, 2.0 / 3.0, 0.0012345678}});
  std::ostringstream out;
  const std::vector<std::string> meta{"auoc=0.5"};
  write_curve_csv(out, c, meta);
  EXPECT_EQ(out.str(), "# auoc=0.5\nx,value,stderr\n0,0,0\n0.333333,0.666667,0.00123457\n");
}

TEST(CurveIoTest, JsonCarriesScopeAndAuoc) {
  const auto c = build_curve(testing::path_graph(10), ObservationScope(Target::edge, Level::global, 1),
                             default_grid(10, 3, Level::global), {}, "path");
  const auto doc = curve_to_json(c);
  EXPECT_EQ(doc["label"], "path");
  EXPECT_EQ(doc["scope"]["target"], "edge");
  EXPECT_EQ(doc["scope"]["hops"], 1);
  EXPECT_EQ(doc["points"].size(), 3u);
  EXPECT_DOUBLE_EQ(doc["auoc"].get<double>(), auoc(c));
}

}  // namespace
}  // namespace groupobs
