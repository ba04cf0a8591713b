#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcp/cost.h"
#include "wcp/farm.h"

namespace wcp {

// Signed integral flow per original edge plus, per substation, the amount
// forwarded to the virtual super substation.
struct Flow {
  std::vector<std::int64_t> edge_flow;   // indexed by EdgeIndex
  std::vector<std::int64_t> sub_inflow;  // indexed by substation ordinal

  static Flow Zero(const WindFarm& farm);

  friend bool operator==(const Flow&, const Flow&) = default;
};

enum class Constraint {
  kTurbineBalance,       // net flow -1 at every turbine
  kSubstationCapacity,   // net flow at most the substation capacity
  kSubstationOutflow,    // no flow leaves a substation
  kCableCapacity,        // |f(e)| within the largest cable
  kSubstationInflow,     // sub_inflow agrees with net flow
  kDimension,
};

struct Violation {
  Constraint constraint;
  VertexIndex vertex = kNoVertex;  // set for vertex constraints
  EdgeIndex edge = -1;             // set for edge constraints
  std::string message;
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Inflow minus outflow over original edges incident to the vertex with the
// given external id. Throws InputError for unknown ids.
std::int64_t NetFlow(const WindFarm& farm, const Flow& flow, VertexId id);
std::int64_t NetFlowAt(const WindFarm& farm, const Flow& flow, VertexIndex v);

FeasibilityReport CheckFeasible(const WindFarm& farm, const Flow& flow);

// Sum over edges of c(|f(e)|) * len(e); infinite if any edge exceeds the
// largest cable.
Cost FlowCost(const WindFarm& farm, const Flow& flow);

// Per edge, the cheapest adequate cable, or nullopt when the edge is unused.
std::vector<std::optional<std::size_t>> AssignCables(const WindFarm& farm,
                                                     const Flow& flow);

const char* ConstraintName(Constraint c);

}  // namespace wcp
