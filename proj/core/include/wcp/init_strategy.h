#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcp/farm.h"
#include "wcp/flow.h"

namespace wcp {

enum class PathMetric { kUnit, kLength };  // BFS / Dijkstra
enum class SubstationTarget { kAny, kLast };  // nearest / farthest

struct InitStrategy {
  PathMetric metric = PathMetric::kLength;
  SubstationTarget target = SubstationTarget::kAny;
  bool collecting = false;

  friend bool operator==(const InitStrategy&, const InitStrategy&) = default;
};

// The eight combinations, in the order bfs-any, bfs-last, dijkstra-any,
// dijkstra-last, then the collecting variants in the same order.
std::vector<InitStrategy> AllInitStrategies();

// "collecting-dijkstra-any" etc.
std::string InitName(const InitStrategy& strategy);
// "C-Dijk-A" etc.
std::string InitAbbreviation(const InitStrategy& strategy);
// Accepts full kebab names and abbreviations, case-insensitive.
std::optional<InitStrategy> ParseInitStrategy(std::string_view name);

struct SubstationPath {
  std::vector<VertexIndex> vertices;  // source first, substation last
  std::vector<EdgeIndex> edges;       // edges[i] joins vertices[i], [i + 1]
  std::int64_t distance = 0;          // hops or fixed-point length
};

// Shortest path from `source` to a substation with free capacity that avoids
// congested edges (one more unit would exceed the largest cable in that
// direction). Substations are never passed through. kAny picks the nearest
// such substation, kLast the one whose shortest distance is largest; ties go
// to the smaller id. nullopt if no free substation is reachable.
std::optional<SubstationPath> ShortestPathToSubstation(
    const WindFarm& farm, const Flow& flow, VertexIndex source,
    PathMetric metric, SubstationTarget target);

// Builds a feasible integral flow by routing turbines in ascending id order.
// Collecting variants also pick up the unrouted units of turbines along the
// path, nearest to the source first, while every edge of the remaining path
// and the substation still have room. Throws InitializationError when some
// turbine cannot be routed.
Flow InitializeFlow(const WindFarm& farm, const InitStrategy& strategy);

}  // namespace wcp
