#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wcp/cost.h"
#include "wcp/farm.h"
#include "wcp/flow.h"

namespace wcp {

struct OracleLimits {
  std::size_t max_turbines = 7;
  std::size_t max_edges = 12;
};

struct OracleResult {
  bool feasible = false;
  Cost cost = Cost::Infinite();
  Flow flow;
  // Cable per edge; nullopt means no cable.
  std::vector<std::optional<std::size_t>> cables;
  std::size_t nodes_visited = 0;
};

// Exact optimum by enumerating integral edge flows. A flow is admissible when
// every turbine has net flow -1, every substation receives between 0 and its
// capacity, no flow leaves a substation and every edge fits in some cable.
// Its cost is that of the cheapest adequate cable per edge. Ties between
// optimal flows go to the lexicographically smallest flow vector.
//
// Flow magnitudes are bounded by min(largest cable, number of turbines):
// any flow can drop its circulations without raising any |f(e)|.
//
// Throws OracleRefusal if the instance exceeds `limits`.
OracleResult SolveExactly(const WindFarm& farm, const OracleLimits& limits = {});

// Total cable cost evaluated edge by edge from the raw catalog, on a code path
// separate from FlowCost.
Cost OracleCostOf(const WindFarm& farm, const Flow& flow);

}  // namespace wcp
