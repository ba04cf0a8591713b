#include "wcp/generator.h"

#include <gtest/gtest.h>

#include "wcp/errors.h"
#include "wcp/init_strategy.h"
#include "wcp/io.h"

namespace wcp {
namespace {

TEST(GeneratorTest, SameSeedSameFarm) {
  for (SizeClass c : {SizeClass::kN1, SizeClass::kN2, SizeClass::kN5}) {
    GeneratorSpec spec = DefaultGeneratorSpec(c, 4);
    spec.seed = 17;
    EXPECT_EQ(Generate(spec), Generate(spec));
    GeneratorSpec other = spec;
    other.seed = 18;
    EXPECT_FALSE(Generate(spec) == Generate(other));
  }
}

TEST(GeneratorTest, CompleteGraphEdgeCount) {
  GeneratorSpec spec = DefaultGeneratorSpec(SizeClass::kN5);
  spec.min_turbines = spec.max_turbines = 10;
  spec.min_substations = spec.max_substations = 2;
  const WindFarm farm = Generate(spec);
  // C(12, 2) pairs minus the single substation pair.
  EXPECT_EQ(farm.num_edges(), 66u - 1u);
}

TEST(GeneratorTest, ClassRangesAndDivisor) {
  EXPECT_EQ(DefaultGeneratorSpec(SizeClass::kN1).min_turbines, 10);
  EXPECT_EQ(DefaultGeneratorSpec(SizeClass::kN1).max_turbines, 79);
  EXPECT_EQ(DefaultGeneratorSpec(SizeClass::kN4).max_turbines, 499);
  EXPECT_EQ(DefaultGeneratorSpec(SizeClass::kN5).connectivity, Connectivity::kComplete);
  EXPECT_EQ(DefaultGeneratorSpec(SizeClass::kN3, 10).min_turbines, 8);
  EXPECT_EQ(DefaultGeneratorSpec(SizeClass::kN1, 100).min_turbines, 1);
  EXPECT_EQ(SizeClassName(SizeClass::kN3), "n3-like");
  EXPECT_EQ(ParseSizeClass("N3"), SizeClass::kN3);
  EXPECT_EQ(ParseSizeClass("n4-like"), SizeClass::kN4);
  EXPECT_EQ(ParseSizeClass("n9"), std::nullopt);
}

TEST(GeneratorTest, FarmsAreValidAndSolvable) {
  for (SizeClass c : {SizeClass::kN1, SizeClass::kN2, SizeClass::kN3, SizeClass::kN4,
                      SizeClass::kN5}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      GeneratorSpec spec = DefaultGeneratorSpec(c, 4);
      spec.seed = seed;
      const WindFarm farm = Generate(spec);
      EXPECT_GE(static_cast<std::int64_t>(farm.num_turbines()), spec.min_turbines);
      EXPECT_LE(static_cast<std::int64_t>(farm.num_turbines()), spec.max_turbines);
      // Round trip through the loader re-validates every invariant.
      EXPECT_EQ(InstanceFromJson(InstanceToJson(farm)), farm);
      EXPECT_GE(farm.total_substation_capacity(),
                static_cast<std::int64_t>(farm.num_turbines()));
      EXPECT_NO_THROW(InitializeFlow(farm, AllInitStrategies()[6]))
          << SizeClassName(c) << " seed " << seed;
    }
  }
}

TEST(GeneratorTest, MaxEdgesKeepsSubstationsReachable) {
  GeneratorSpec spec = DefaultGeneratorSpec(SizeClass::kN1);
  spec.min_turbines = spec.max_turbines = 6;
  spec.max_edges = 8;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    spec.seed = seed;
    const WindFarm farm = Generate(spec);
    EXPECT_LE(farm.num_edges(), 8u);
    EXPECT_NO_THROW(InitializeFlow(farm, AllInitStrategies()[0]));
  }
}

TEST(GeneratorTest, DegenerateSpecsThrow) {
  GeneratorSpec spec;
  spec.min_turbines = spec.max_turbines = 0;
  EXPECT_THROW(Generate(spec), InputError);
  spec = GeneratorSpec{};
  spec.max_substations = 0;
  EXPECT_THROW(Generate(spec), InputError);
  EXPECT_THROW(DefaultGeneratorSpec(SizeClass::kN1, 0), InputError);
}

}  // namespace
}  // namespace wcp
