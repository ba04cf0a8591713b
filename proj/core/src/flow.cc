#include "wcp/flow.h"

#include <cstdlib>

#include "wcp/errors.h"

namespace wcp {

Flow Flow::Zero(const WindFarm& farm) {
  Flow flow;
  flow.edge_flow.assign(farm.num_edges(), 0);
  flow.sub_inflow.assign(farm.num_substations(), 0);
  return flow;
}

namespace {

bool DimensionsMatch(const WindFarm& farm, const Flow& flow) {
  return flow.edge_flow.size() == farm.num_edges() &&
         flow.sub_inflow.size() == farm.num_substations();
}

std::string IdOf(const WindFarm& farm, VertexIndex v) {
  return std::to_string(farm.vertex(v).id);
}

std::string EdgeName(const WindFarm& farm, EdgeIndex e) {
  const Edge& edge = farm.edge(e);
  return "(" + IdOf(farm, edge.tail) + ", " + IdOf(farm, edge.head) + ")";
}

}  // namespace

std::int64_t NetFlowAt(const WindFarm& farm, const Flow& flow, VertexIndex v) {
  std::int64_t net = 0;
  for (EdgeIndex e : farm.incident(v)) {
    const Edge& edge = farm.edge(e);
    if (edge.head == v) net += flow.edge_flow[e];
    if (edge.tail == v) net -= flow.edge_flow[e];
  }
  return net;
}

std::int64_t NetFlow(const WindFarm& farm, const Flow& flow, VertexId id) {
  if (!DimensionsMatch(farm, flow)) {
    throw InputError("flow dimensions do not match the farm");
  }
  return NetFlowAt(farm, flow, farm.IndexOf(id));
}

FeasibilityReport CheckFeasible(const WindFarm& farm, const Flow& flow) {
  FeasibilityReport report;
  if (!DimensionsMatch(farm, flow)) {
    report.violations.push_back(
        {Constraint::kDimension, kNoVertex, -1,
         "flow dimensions do not match the farm"});
    return report;
  }

  for (VertexIndex t : farm.turbines()) {
    const std::int64_t net = NetFlowAt(farm, flow, t);
    if (net != -1) {
      report.violations.push_back(
          {Constraint::kTurbineBalance, t, -1,
           "turbine " + IdOf(farm, t) + " has net flow " +
               std::to_string(net) + ", expected -1"});
    }
  }

  for (VertexIndex s : farm.substations()) {
    const std::int64_t net = NetFlowAt(farm, flow, s);
    const std::int64_t inflow = flow.sub_inflow[farm.substation_ordinal(s)];
    if (net > farm.vertex(s).capacity) {
      report.violations.push_back(
          {Constraint::kSubstationCapacity, s, -1,
           "substation " + IdOf(farm, s) + " receives " + std::to_string(net) +
               " units, capacity " + std::to_string(farm.vertex(s).capacity)});
    }
    if (inflow != net) {
      report.violations.push_back(
          {Constraint::kSubstationInflow, s, -1,
           "substation " + IdOf(farm, s) + " forwards " +
               std::to_string(inflow) + " units but receives " +
               std::to_string(net)});
    }
  }

  const std::int64_t max_capacity = farm.catalog().max_capacity();
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(farm.num_edges()); ++e) {
    const Edge& edge = farm.edge(e);
    const std::int64_t f = flow.edge_flow[e];
    if ((farm.is_substation(edge.head) && f < 0) ||
        (farm.is_substation(edge.tail) && f > 0)) {
      report.violations.push_back({Constraint::kSubstationOutflow, kNoVertex, e,
                                   "flow leaves a substation on edge " +
                                       EdgeName(farm, e)});
    }
    if (std::llabs(f) > max_capacity) {
      report.violations.push_back(
          {Constraint::kCableCapacity, kNoVertex, e,
           "edge " + EdgeName(farm, e) + " carries " + std::to_string(f) +
               " units, largest cable holds " + std::to_string(max_capacity)});
    }
  }
  return report;
}

Cost FlowCost(const WindFarm& farm, const Flow& flow) {
  if (!DimensionsMatch(farm, flow)) {
    throw InputError("flow dimensions do not match the farm");
  }
  Cost total;
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(farm.num_edges()); ++e) {
    total += farm.catalog().EdgeCost(flow.edge_flow[e], farm.edge(e).length);
  }
  return total;
}

std::vector<std::optional<std::size_t>> AssignCables(const WindFarm& farm,
                                                     const Flow& flow) {
  std::vector<std::optional<std::size_t>> cables(farm.num_edges());
  for (std::size_t e = 0; e < farm.num_edges(); ++e) {
    cables[e] = farm.catalog().CableFor(flow.edge_flow[e]);
  }
  return cables;
}

const char* ConstraintName(Constraint c) {
  switch (c) {
    case Constraint::kTurbineBalance:
      return "turbine-balance";
    case Constraint::kSubstationCapacity:
      return "substation-capacity";
    case Constraint::kSubstationOutflow:
      return "substation-outflow";
    case Constraint::kCableCapacity:
      return "cable-capacity";
    case Constraint::kSubstationInflow:
      return "substation-inflow";
    case Constraint::kDimension:
      return "dimension";
  }
  return "unknown";
}

}  // namespace wcp
