#include "wcp/cycles.h"

#include <algorithm>
#include <unordered_map>

#include "wcp/errors.h"

namespace wcp {

bool IsClosedWalk(const ResidualGraph& graph,
                  std::span<const ResidualEdgeIndex> edges) {
  if (edges.empty()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const ResidualEdge& cur = graph.edge(edges[i]);
    const ResidualEdge& next = graph.edge(edges[(i + 1) % edges.size()]);
    if (cur.head != next.tail) return false;
  }
  return true;
}

bool IsUTurnFree(const ResidualGraph& graph,
                 std::span<const ResidualEdgeIndex> edges) {
  if (edges.size() < 2) return true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const ResidualEdgeIndex next = edges[(i + 1) % edges.size()];
    if (graph.edge(edges[i]).reverse == next) return false;
  }
  return true;
}

bool IsSimpleCycle(const ResidualGraph& graph,
                   std::span<const ResidualEdgeIndex> edges) {
  if (!IsClosedWalk(graph, edges)) return false;
  std::vector<VertexIndex> starts;
  starts.reserve(edges.size());
  for (ResidualEdgeIndex e : edges) starts.push_back(graph.edge(e).tail);
  std::sort(starts.begin(), starts.end());
  return std::adjacent_find(starts.begin(), starts.end()) == starts.end();
}

Cost SumGamma(std::span<const Cost> gamma,
              std::span<const ResidualEdgeIndex> edges) {
  Cost total;
  for (ResidualEdgeIndex e : edges) total += gamma[e];
  return total;
}

std::optional<Walk> ExtractNegativeClosedWalk(const LabelTable& labels,
                                              const ResidualView& residual,
                                              ResidualEdgeIndex e) {
  if (!CanRelax(labels, residual, e)) return std::nullopt;
  const ResidualGraph& graph = *residual.graph;

  // Built backwards: trail[0] = e, trail[i + 1] precedes trail[i].
  std::vector<ResidualEdgeIndex> trail{e};
  std::unordered_map<ResidualEdgeIndex, std::size_t> position{{e, 0}};
  for (;;) {
    const ResidualEdge& current = graph.edge(trail.back());
    const Label& label = labels.UsableLabel(current.tail, current.reverse);
    if (label.parent == kNoResidualEdge || label.value.IsInfinite()) {
      return std::nullopt;
    }
    auto [it, inserted] = position.emplace(label.parent, trail.size());
    if (!inserted) {
      Walk walk;
      walk.edges.assign(trail.rbegin(),
                        trail.rend() - static_cast<std::ptrdiff_t>(it->second));
      walk.total_gamma = SumGamma(residual.gamma, walk.edges);
      return walk;
    }
    trail.push_back(label.parent);
  }
}

std::vector<Cycle> DecomposeWalk(const ResidualGraph& graph,
                                 std::span<const Cost> gamma,
                                 const Walk& walk) {
  if (!IsClosedWalk(graph, walk.edges)) {
    throw InputError("cannot decompose a walk that is not closed");
  }
  std::vector<Cycle> cycles;
  std::vector<VertexIndex> vertex_stack{graph.edge(walk.edges.front()).tail};
  std::vector<ResidualEdgeIndex> edge_stack;
  std::unordered_map<VertexIndex, std::size_t> on_stack{
      {vertex_stack.front(), 0}};

  for (ResidualEdgeIndex e : walk.edges) {
    edge_stack.push_back(e);
    const VertexIndex w = graph.edge(e).head;
    auto it = on_stack.find(w);
    if (it == on_stack.end()) {
      on_stack.emplace(w, vertex_stack.size());
      vertex_stack.push_back(w);
      continue;
    }
    const std::size_t p = it->second;
    Cycle cycle;
    cycle.edges.assign(edge_stack.begin() + static_cast<std::ptrdiff_t>(p),
                       edge_stack.end());
    cycle.total_gamma = SumGamma(gamma, cycle.edges);
    cycles.push_back(std::move(cycle));
    edge_stack.resize(p);
    for (std::size_t i = p + 1; i < vertex_stack.size(); ++i) {
      on_stack.erase(vertex_stack[i]);
    }
    vertex_stack.resize(p + 1);
  }
  if (!edge_stack.empty()) {
    throw InvariantError("walk decomposition left unmatched edges");
  }
  return cycles;
}

Cost CycleGamma(const ResidualGraph& graph, const Flow& flow,
                std::int64_t delta, std::span<const ResidualEdgeIndex> edges) {
  Cost total;
  for (ResidualEdgeIndex e : edges) {
    total += ResidualCost(graph.farm(), flow, delta, graph.edge(e));
    if (total.IsInfinite()) break;
  }
  return total;
}

void PushAlong(const ResidualGraph& graph, Flow& flow, std::int64_t delta,
               std::span<const ResidualEdgeIndex> edges) {
  for (ResidualEdgeIndex i : edges) {
    const ResidualEdge& e = graph.edge(i);
    switch (e.kind) {
      case ResidualKind::kForward:
        flow.edge_flow[e.ref] += delta;
        break;
      case ResidualKind::kBackward:
        flow.edge_flow[e.ref] -= delta;
        break;
      case ResidualKind::kToSuper:
        flow.sub_inflow[e.ref] += delta;
        break;
      case ResidualKind::kFromSuper:
        flow.sub_inflow[e.ref] -= delta;
        break;
    }
  }
}

Flow CancelCycle(const ResidualGraph& graph, const Flow& flow,
                 const Cycle& cycle, std::int64_t delta) {
  if (!cycle.is_long()) {
    throw InvariantError("refusing to cancel a cycle of fewer than 3 edges");
  }
  if (!IsSimpleCycle(graph, cycle.edges)) {
    throw InvariantError("refusing to cancel a non-simple cycle");
  }
  const Cost gamma = CycleGamma(graph, flow, delta, cycle.edges);
  if (gamma.IsInfinite()) {
    throw InvariantError("refusing to cancel a cycle with infinite gamma");
  }
  if (!gamma.IsNegative()) {
    throw InvariantError("refusing to cancel a non-negative cycle");
  }
  Flow next = flow;
  PushAlong(graph, next, delta, cycle.edges);
  return next;
}

}  // namespace wcp
