#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcp/farm.h"

namespace wcp {

// Size/topology classes modeled on common wind farm benchmark sets. The
// instances are synthetic; only the turbine counts and topology mirror the
// originals.
enum class SizeClass { kN1, kN2, kN3, kN4, kN5 };
enum class Connectivity { kKNearest, kComplete };

std::string_view SizeClassName(SizeClass c);  // "n1-like" ...
std::optional<SizeClass> ParseSizeClass(std::string_view name);

struct GeneratorSpec {
  SizeClass size_class = SizeClass::kN1;
  std::int64_t min_turbines = 10;
  std::int64_t max_turbines = 79;
  std::int64_t min_substations = 1;
  std::int64_t max_substations = 1;
  Connectivity connectivity = Connectivity::kKNearest;
  std::int64_t k = 8;
  // Drops the longest edges beyond this count while every turbine still
  // reaches a substation.
  std::optional<std::size_t> max_edges;
  // Total substation capacity relative to the number of turbines.
  double capacity_slack = 1.25;
  std::vector<CableType> cables;  // empty: DefaultCables()
  std::uint64_t seed = 0;
};

// Class defaults:
//   N1  10-79 turbines,  1 substation,  k-nearest
//   N2  20-79 turbines,  2-3 substations, k-nearest
//   N3  80-180 turbines, 2-4 substations, k-nearest
//   N4  200-499 turbines, 3-6 substations, k-nearest
//   N5  80-180 turbines, 2-4 substations, complete
// Turbine bounds are divided by `divisor` (at least 1 turbine remains).
GeneratorSpec DefaultGeneratorSpec(SizeClass c, std::int64_t divisor = 1);

// Three cable types with strictly increasing capacity and cost.
std::vector<CableType> DefaultCables();

// Random turbines in a square, substations on its boundary, Euclidean
// lengths. Deterministic per spec. Throws InputError for degenerate specs.
WindFarm Generate(const GeneratorSpec& spec);

}  // namespace wcp
