#include "wcp/oracle.h"

#include <gtest/gtest.h>

#include <random>

#include "support/test_farms.h"
#include "wcp/errors.h"
#include "wcp/init_strategy.h"

namespace wcp {
namespace {

using testing::MakeFarm;
using testing::Money;
using testing::Substation;
using testing::Turbine;

TEST(OracleTest, SingleEdge) {
  const WindFarm farm =
      MakeFarm({Turbine(1), Substation(2, 2)}, {{1, 2, 7}}, {{1, 1.25}, {4, 3}});
  const OracleResult r = SolveExactly(farm);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.cost, Money("8.75"));
  EXPECT_EQ(r.cables[0], 0u);
}

TEST(OracleTest, PathOptimum) {
  const WindFarm farm = MakeFarm({Turbine(1), Turbine(2), Substation(3, 2)},
                                 {{1, 2, 2}, {2, 3, 3}}, {{1, 1}, {3, 2}});
  const OracleResult r = SolveExactly(farm);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.cost, Money("8"));
  EXPECT_EQ(r.flow.edge_flow, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(OracleCostOf(farm, r.flow), Money("8"));
  EXPECT_EQ(OracleCostOf(farm, Flow::Zero(farm)), Cost::Zero());
}

TEST(OracleTest, SmallExampleOptimumIsTheStar) {
  const WindFarm farm = testing::SmallExampleFarm();
  const OracleResult r = SolveExactly(farm);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.cost, Money("9"));
  EXPECT_EQ(r.flow, testing::SmallExampleStarFlow(farm));
}

TEST(OracleTest, PigeonholeInfeasible) {
  const WindFarm farm = MakeFarm({Turbine(1), Turbine(2), Substation(3, 1)},
                                 {{1, 3, 1}, {2, 3, 1}}, {{5, 1}});
  EXPECT_FALSE(SolveExactly(farm).feasible);
}

TEST(OracleTest, RefusesOversizedInstances) {
  std::vector<Vertex> vertices = {Substation(100, 50)};
  std::vector<testing::E> edges;
  for (int t = 0; t < 8; ++t) {
    vertices.push_back(Turbine(t));
    edges.push_back({t, 100, 1});
  }
  const WindFarm farm = MakeFarm(vertices, edges, {{1, 1}});
  EXPECT_THROW(SolveExactly(farm), OracleRefusal);
  EXPECT_NO_THROW(SolveExactly(farm, {.max_turbines = 8, .max_edges = 12}));
}

TEST(OracleTest, NeverWorseThanAnyInitialFlow) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const WindFarm farm = testing::RandomFarm(rng);
    const OracleResult r = SolveExactly(farm);
    if (r.feasible) {
      ASSERT_TRUE(CheckFeasible(farm, r.flow).ok());
      ASSERT_EQ(FlowCost(farm, r.flow), r.cost);
    }
    for (const InitStrategy& s : AllInitStrategies()) {
      try {
        const Flow flow = InitializeFlow(farm, s);
        ASSERT_TRUE(r.feasible) << i;
        EXPECT_LE(r.cost, FlowCost(farm, flow)) << i;
      } catch (const InitializationError&) {
      }
    }
  }
}

// Relabeling ids and flipping turbine-turbine edges leaves the optimum alone.
TEST(OracleTest, InvariantUnderRelabelingAndReorientation) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 80; ++i) {
    const WindFarm farm = testing::RandomFarm(rng);
    std::vector<VertexId> new_id(farm.num_vertices());
    for (std::size_t v = 0; v < new_id.size(); ++v) {
      new_id[v] = static_cast<VertexId>(100 - 3 * v);
    }
    std::vector<Vertex> vertices;
    for (std::size_t v = 0; v < farm.num_vertices(); ++v) {
      Vertex copy = farm.vertex(static_cast<VertexIndex>(v));
      copy.id = new_id[v];
      vertices.push_back(copy);
    }
    std::vector<EdgeSpec> edges;
    for (const Edge& e : farm.edges()) {
      EdgeSpec spec{new_id[e.tail], new_id[e.head], e.length};
      if (!farm.is_substation(e.tail) && !farm.is_substation(e.head)) {
        std::swap(spec.u, spec.v);
      }
      edges.push_back(spec);
    }
    const WindFarm other = WindFarm::Create(
        vertices, edges,
        std::vector<CableType>(farm.catalog().cables().begin(),
                               farm.catalog().cables().end()));
    const OracleResult a = SolveExactly(farm);
    const OracleResult b = SolveExactly(other);
    ASSERT_EQ(a.feasible, b.feasible);
    EXPECT_EQ(a.cost, b.cost) << i;
  }
}

}  // namespace
}  // namespace wcp
