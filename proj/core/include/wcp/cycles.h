#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wcp/cost.h"
#include "wcp/flow.h"
#include "wcp/labels.h"
#include "wcp/residual.h"

namespace wcp {

// Consecutive residual edges. A closed walk ends where it starts; a cycle is
// a closed walk in which no two edges start at the same vertex.
struct Walk {
  std::vector<ResidualEdgeIndex> edges;
  Cost total_gamma;

  std::size_t size() const { return edges.size(); }
  bool is_long() const { return edges.size() >= 3; }
};
using Cycle = Walk;

bool IsClosedWalk(const ResidualGraph& graph,
                  std::span<const ResidualEdgeIndex> edges);
// No edge directly follows its reverse, including across the closing point
// of a closed walk.
bool IsUTurnFree(const ResidualGraph& graph,
                 std::span<const ResidualEdgeIndex> edges);
bool IsSimpleCycle(const ResidualGraph& graph,
                   std::span<const ResidualEdgeIndex> edges);

Cost SumGamma(std::span<const Cost> gamma,
              std::span<const ResidualEdgeIndex> edges);

// If e can still be relaxed, walks parent pointers backwards from e, each
// step taking the smallest (oldest on ties) incoming label that is not the
// reverse of the current edge, until an edge repeats. Returns the closed
// subwalk in forward order. Returns nullopt if e is not relaxable.
std::optional<Walk> ExtractNegativeClosedWalk(const LabelTable& labels,
                                              const ResidualView& residual,
                                              ResidualEdgeIndex e);

// Splits a closed walk into simple cycles with a vertex stack. Each
// cycle's total_gamma is taken from `gamma`. Throws InputError for a walk
// that is not closed or not consecutive.
std::vector<Cycle> DecomposeWalk(const ResidualGraph& graph,
                                 std::span<const Cost> gamma, const Walk& walk);

// Gamma of the cycle's edges evaluated against `flow`.
Cost CycleGamma(const ResidualGraph& graph, const Flow& flow,
                std::int64_t delta, std::span<const ResidualEdgeIndex> edges);

// Pushes delta along every edge, without checks. Pushing along the reverse
// edges undoes it.
void PushAlong(const ResidualGraph& graph, Flow& flow, std::int64_t delta,
               std::span<const ResidualEdgeIndex> edges);

// Cancels a long negative cycle. Throws InvariantError unless the cycle is
// simple, has at least three edges, every edge has finite gamma against
// `flow` and the total gamma is negative.
Flow CancelCycle(const ResidualGraph& graph, const Flow& flow,
                 const Cycle& cycle, std::int64_t delta);

}  // namespace wcp
