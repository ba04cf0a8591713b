#include "wcp/init_strategy.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/test_farms.h"
#include "wcp/errors.h"

namespace wcp {
namespace {

using testing::MakeFarm;
using testing::Substation;
using testing::Turbine;

constexpr InitStrategy kDijkAny{PathMetric::kLength, SubstationTarget::kAny, false};
constexpr InitStrategy kDijkLast{PathMetric::kLength, SubstationTarget::kLast, false};
constexpr InitStrategy kCDijkA{PathMetric::kLength, SubstationTarget::kAny, true};

TEST(InitStrategyTest, EightDistinctNamedStrategies) {
  const auto all = AllInitStrategies();
  ASSERT_EQ(all.size(), 8u);
  std::set<std::string> names;
  std::set<std::string> abbreviations;
  for (const InitStrategy& s : all) {
    names.insert(InitName(s));
    abbreviations.insert(InitAbbreviation(s));
    EXPECT_EQ(ParseInitStrategy(InitName(s)), s);
    EXPECT_EQ(ParseInitStrategy(InitAbbreviation(s)), s);
  }
  EXPECT_EQ(names.size(), 8u);
  EXPECT_EQ(abbreviations,
            (std::set<std::string>{"BFS-A", "BFS-L", "Dijk-A", "Dijk-L", "C-BFS-A",
                                   "C-BFS-L", "C-Dijk-A", "C-Dijk-L"}));
  EXPECT_EQ(InitName(kCDijkA), "collecting-dijkstra-any");
  EXPECT_EQ(ParseInitStrategy("c-dijk-a"), kCDijkA);
  EXPECT_EQ(ParseInitStrategy("greedy"), std::nullopt);
}

TEST(ShortestPathTest, SingleEdge) {
  const WindFarm farm = MakeFarm({Turbine(1), Substation(2, 1)}, {{1, 2, 4}}, {{1, 1}});
  const auto path = ShortestPathToSubstation(farm, Flow::Zero(farm), 0,
                                             PathMetric::kLength, SubstationTarget::kAny);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->edges, (std::vector<EdgeIndex>{0}));
  EXPECT_EQ(path->vertices, (std::vector<VertexIndex>{0, 1}));
  EXPECT_EQ(path->distance, ToFixed(4));
}

TEST(ShortestPathTest, AnyPicksNearestAndLastPicksFarthest) {
  const WindFarm farm = MakeFarm({Turbine(1), Substation(2, 1), Substation(3, 1)},
                                 {{1, 2, 3}, {1, 3, 5}}, {{1, 1}});
  const Flow zero = Flow::Zero(farm);
  const auto any =
      ShortestPathToSubstation(farm, zero, 0, PathMetric::kLength, SubstationTarget::kAny);
  const auto last =
      ShortestPathToSubstation(farm, zero, 0, PathMetric::kLength, SubstationTarget::kLast);
  ASSERT_TRUE(any && last);
  EXPECT_EQ(farm.vertex(any->vertices.back()).id, 2);
  EXPECT_EQ(any->distance, ToFixed(3));
  EXPECT_EQ(farm.vertex(last->vertices.back()).id, 3);
  EXPECT_EQ(last->distance, ToFixed(5));
  // BFS sees two substations at one hop; the tie goes to the smaller id.
  const auto bfs_last =
      ShortestPathToSubstation(farm, zero, 0, PathMetric::kUnit, SubstationTarget::kLast);
  EXPECT_EQ(farm.vertex(bfs_last->vertices.back()).id, 2);
  EXPECT_EQ(bfs_last->distance, 1);
}

TEST(ShortestPathTest, SaturatedSubstationsAndCongestedEdgesAreAvoided) {
  const WindFarm farm = MakeFarm({Turbine(1), Turbine(2), Substation(3, 1)},
                                 {{1, 3, 1}, {2, 3, 1}, {1, 2, 1}}, {{1, 1}});
  Flow full = testing::MakeFlow(farm, {{1, 3, 1}});
  EXPECT_FALSE(ShortestPathToSubstation(farm, full, 1, PathMetric::kLength,
                                        SubstationTarget::kAny));
  // Edge 1 -> 2 already carries the largest cable's capacity.
  const WindFarm wide = MakeFarm({Turbine(1), Turbine(2), Substation(3, 5)},
                                 {{1, 2, 1}, {2, 3, 5}, {1, 3, 50}}, {{1, 1}});
  const Flow congested = testing::MakeFlow(wide, {{1, 2, 1}, {2, 3, 1}});
  const auto path = ShortestPathToSubstation(wide, congested, 0, PathMetric::kLength,
                                             SubstationTarget::kAny);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->distance, ToFixed(50));
}

TEST(InitializeFlowTest, CollectingPicksUpTurbinesOnThePath) {
  // t1 - t2 - sub: routing t1 passes t2 and takes its unit along.
  const WindFarm farm = MakeFarm({Turbine(1), Turbine(2), Substation(3, 2)},
                                 {{1, 2, 1}, {2, 3, 1}}, {{2, 1}});
  const Flow flow = InitializeFlow(farm, kCDijkA);
  EXPECT_EQ(flow.edge_flow, (std::vector<std::int64_t>{1, 2}));
  EXPECT_TRUE(CheckFeasible(farm, flow).ok());
}

TEST(InitializeFlowTest, CollectingRespectsSuffixCapacity) {
  // Only two units fit on t2 -> sub; t3 lies past t2 on t1's path.
  const WindFarm farm =
      MakeFarm({Turbine(1), Turbine(2), Turbine(3), Substation(4, 3)},
               {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 5}, {1, 4, 9}},
               {{1, 1}, {2, 3}});
  const Flow flow = InitializeFlow(farm, kCDijkA);
  EXPECT_TRUE(CheckFeasible(farm, flow).ok());
  for (std::int64_t f : flow.edge_flow) EXPECT_LE(std::llabs(f), 2);
}

TEST(InitializeFlowTest, PigeonholeFailure) {
  const WindFarm farm = MakeFarm({Turbine(1), Turbine(2), Substation(3, 1)},
                                 {{1, 3, 1}, {2, 3, 1}}, {{5, 1}});
  for (const InitStrategy& s : AllInitStrategies()) {
    EXPECT_THROW(InitializeFlow(farm, s), InitializationError) << InitName(s);
  }
}

TEST(InitializeFlowTest, EveryStrategyIsFeasibleOnRandomFarms) {
  std::mt19937_64 rng(12);
  int routed = 0;
  for (int i = 0; i < 300; ++i) {
    const WindFarm farm = testing::RandomFarm(rng);
    for (const InitStrategy& s : AllInitStrategies()) {
      try {
        const Flow flow = InitializeFlow(farm, s);
        ASSERT_TRUE(CheckFeasible(farm, flow).ok()) << i << " " << InitName(s);
        ASSERT_TRUE(FlowCost(farm, flow).IsFinite());
        ++routed;
      } catch (const InitializationError&) {
      }
    }
  }
  EXPECT_GT(routed, 1500);
}

TEST(InitializeFlowTest, BfsIgnoresLengths) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const WindFarm farm = testing::RandomFarm(rng);
    std::vector<Vertex> vertices(farm.vertices().begin(), farm.vertices().end());
    std::vector<EdgeSpec> edges;
    for (const Edge& e : farm.edges()) {
      edges.push_back({farm.vertex(e.tail).id, farm.vertex(e.head).id, 7 * e.length});
    }
    const WindFarm stretched = WindFarm::Create(
        vertices, edges,
        std::vector<CableType>(farm.catalog().cables().begin(),
                               farm.catalog().cables().end()));
    for (const InitStrategy& s : AllInitStrategies()) {
      if (s.metric != PathMetric::kUnit) continue;
      std::optional<Flow> a;
      std::optional<Flow> b;
      try {
        a = InitializeFlow(farm, s);
      } catch (const InitializationError&) {
      }
      try {
        b = InitializeFlow(stretched, s);
      } catch (const InitializationError&) {
      }
      EXPECT_EQ(a, b) << i << " " << InitName(s);
    }
  }
}

TEST(InitializeFlowTest, LastTargetsFarthestSubstation) {
  const WindFarm farm = MakeFarm({Turbine(1), Substation(2, 1), Substation(3, 1)},
                                 {{1, 2, 3}, {1, 3, 5}}, {{1, 1}});
  EXPECT_EQ(InitializeFlow(farm, kDijkAny).edge_flow, (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(InitializeFlow(farm, kDijkLast).edge_flow, (std::vector<std::int64_t>{0, 1}));
}

}  // namespace
}  // namespace wcp
