#include "wcp/experiment.h"

#include <gtest/gtest.h>

#include "support/test_farms.h"
#include "wcp/generator.h"

namespace wcp {
namespace {

std::vector<NamedInstance> Instances(int count, std::int64_t turbines) {
  std::vector<NamedInstance> instances;
  for (int i = 0; i < count; ++i) {
    GeneratorSpec spec = DefaultGeneratorSpec(SizeClass::kN2);
    spec.min_turbines = spec.max_turbines = turbines;
    spec.seed = static_cast<std::uint64_t>(i);
    instances.push_back({"farm" + std::to_string(i), Generate(spec)});
  }
  return instances;
}

TEST(ExperimentTest, AllVariantsAreTheSixtyFourPairs) {
  const auto variants = AllVariants();
  ASSERT_EQ(variants.size(), 64u);
  EXPECT_EQ(InitName(variants[0].init), "bfs-any");
  EXPECT_EQ(variants[1].delta, DeltaKind::kDec);
}

TEST(ExperimentTest, RowsInInstanceThenVariantOrder) {
  ExperimentOptions options;
  options.variants = {{AllInitStrategies()[0], DeltaKind::kInc},
                      {AllInitStrategies()[6], DeltaKind::kIncDec}};
  const auto rows = RunExperiment(Instances(2, 15), options);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].instance, "farm0");
  EXPECT_EQ(rows[1].instance, "farm0");
  EXPECT_EQ(rows[1].init, "collecting-dijkstra-any");
  EXPECT_EQ(rows[1].delta, "inc-dec");
  EXPECT_EQ(rows[2].instance, "farm1");
  for (const auto& row : rows) {
    EXPECT_TRUE(row.cost);
    EXPECT_EQ(row.status, "exhausted");
  }
}

TEST(ExperimentTest, CsvIsBitIdenticalAcrossRerunsAndJobCounts) {
  ExperimentOptions options;
  options.variants = AllVariants();
  options.seed = 5;
  const auto instances = Instances(2, 12);
  const std::string serial = ExperimentCsv(RunExperiment(instances, options), true);
  EXPECT_EQ(ExperimentCsv(RunExperiment(instances, options), true), serial);
  options.jobs = 4;
  std::vector<std::string> streamed;
  const auto rows = RunExperiment(instances, options, [&](const ExperimentRow& row) {
    streamed.push_back(row.instance + row.init + row.delta);
  });
  EXPECT_EQ(ExperimentCsv(rows, true), serial);
  ASSERT_EQ(streamed.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(streamed[i], rows[i].instance + rows[i].init + rows[i].delta);
  }
}

TEST(ExperimentTest, FailuresAreRecordedAndResumeSkips) {
  auto instances = Instances(2, 10);
  instances.push_back(
      {"broken", testing::MakeFarm({testing::Turbine(1), testing::Turbine(2),
                                    testing::Substation(3, 1)},
                                   {{1, 3, 1}, {2, 3, 1}}, {{5, 1}})});
  ExperimentOptions options;
  options.variants = {{AllInitStrategies()[6], DeltaKind::kIncDec}};
  options.skip = {"farm0"};
  const auto rows = RunExperiment(instances, options);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].instance, "farm1");
  EXPECT_EQ(rows[1].instance, "broken");
  EXPECT_FALSE(rows[1].cost);
  EXPECT_EQ(rows[1].status.rfind("error: ", 0), 0u);
}

TEST(ExperimentTest, CsvRoundTrip) {
  ExperimentOptions options;
  options.variants = {{AllInitStrategies()[2], DeltaKind::kRandom}};
  auto rows = RunExperiment(Instances(3, 10), options);
  rows.push_back({"odd, \"name\"", "bfs-any", "inc", 1, std::nullopt, 0.0, 0, 0,
                  "error: x, y"});
  const std::string csv = ExperimentCsv(rows);
  const auto parsed = ParseExperimentCsv(csv);
  ASSERT_EQ(parsed.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(parsed[i].instance, rows[i].instance);
    EXPECT_EQ(parsed[i].cost, rows[i].cost);
    EXPECT_EQ(parsed[i].iterations, rows[i].iterations);
    EXPECT_EQ(parsed[i].cancels, rows[i].cancels);
    EXPECT_EQ(parsed[i].status, rows[i].status);
  }
  EXPECT_EQ(ExperimentCsv(parsed, true), ExperimentCsv(rows, true));
}

TEST(ExperimentTest, MeanOverInitializations) {
  std::vector<ExperimentRow> rows;
  const auto inits = AllInitStrategies();
  for (std::size_t i = 0; i < inits.size(); ++i) {
    ExperimentRow row;
    row.instance = "a";
    row.init = InitName(inits[i]);
    row.delta = "inc";
    row.cost = testing::Money(std::to_string(i + 1).c_str());
    rows.push_back(row);
  }
  rows.push_back({"a", "bfs-any", "dec", 0, testing::Money("10"), 0, 0, 0, "exhausted"});
  rows.push_back({"a", "bfs-last", "dec", 0, std::nullopt, 0, 0, 0, "error: x"});
  const auto means = MeanOverInitializations(rows);
  EXPECT_DOUBLE_EQ(means.at({"a", "inc"}), 4.5);
  EXPECT_DOUBLE_EQ(means.at({"a", "dec"}), 10.0);
  const auto costs = CostsFor(rows, {"a", "b"}, "bfs-last", "inc");
  EXPECT_EQ(costs[0], 2.0);
  EXPECT_EQ(costs[1], std::nullopt);
}

}  // namespace
}  // namespace wcp
