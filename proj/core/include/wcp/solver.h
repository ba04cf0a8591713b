#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wcp/cost.h"
#include "wcp/delta_strategy.h"
#include "wcp/farm.h"
#include "wcp/flow.h"
#include "wcp/init_strategy.h"
#include "wcp/residual.h"

namespace wcp {

struct SolveLimits {
  std::optional<std::chrono::milliseconds> time;
  std::optional<std::int64_t> iterations;  // outer delta iterations
};

// Passed to SolveOptions::on_cancel after every cancellation.
struct CancelEvent {
  const ResidualGraph* graph = nullptr;
  const Flow* before = nullptr;
  const Flow* after = nullptr;
  const std::vector<ResidualEdgeIndex>* cycle = nullptr;
  std::int64_t delta = 0;
  Cost gamma;
  Cost cost_before;
  Cost cost_after;
};

struct SolveOptions {
  InitStrategy init;
  DeltaKind delta = DeltaKind::kIncDec;
  std::uint64_t seed = 0;
  SolveLimits limits;
  // Re-checks feasibility and the exact cost change after every
  // cancellation, throwing InvariantError on a mismatch.
  bool verify = false;
  std::function<void(const CancelEvent&)> on_cancel;
};

// One cancellation.
struct TraceStep {
  std::int64_t iteration = 0;
  std::int64_t delta = 0;
  std::size_t cycle_length = 0;
  Cost cycle_gamma;  // against the flow at cancellation time
  Cost cost;         // after the cancellation
};

enum class StopReason { kExhausted, kTimeLimit, kIterationLimit };

struct Solution {
  Flow flow;
  Cost cost;
  Cost initial_cost;
  std::vector<std::optional<std::size_t>> cables;  // per edge
  std::vector<TraceStep> trace;
  std::int64_t iterations = 0;
  StopReason stop = StopReason::kExhausted;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;  // from before initialization to termination
};

// Negative cycle canceling. Throws InitializationError when the
// initialization strategy cannot route every turbine.
Solution Solve(const WindFarm& farm, const SolveOptions& options);

// Same, starting from a given feasible flow; options.init is ignored. Throws
// InputError when `initial` is infeasible.
Solution SolveFrom(const WindFarm& farm, Flow initial,
                   const SolveOptions& options);

const char* StopReasonName(StopReason reason);

// CSV "seed,iteration,delta,cycle_length,cycle_gamma,cost" with a header.
std::string TraceCsv(const Solution& solution);

}  // namespace wcp
