#include "wcp/solver.h"

#include <memory>
#include <sstream>

#include "wcp/cycles.h"
#include "wcp/errors.h"
#include "wcp/labels.h"
#include "wcp/residual.h"

namespace wcp {

namespace {

using Clock = std::chrono::steady_clock;

void VerifyStep(const WindFarm& farm, const ResidualGraph& graph,
                const Flow& before, const Flow& after, const Cycle& cycle,
                Cost gamma, Cost cost_before, Cost cost_after) {
  if (!IsUTurnFree(graph, cycle.edges)) {
    throw InvariantError("canceled cycle contains a U-turn");
  }
  const FeasibilityReport report = CheckFeasible(farm, after);
  if (!report.ok()) {
    throw InvariantError("cancellation broke feasibility: " +
                         report.violations.front().message);
  }
  if (FlowCost(farm, before) != cost_before ||
      FlowCost(farm, after) != cost_after ||
      cost_after != cost_before + gamma) {
    throw InvariantError("cost change differs from the cycle's gamma");
  }
}

Solution Cancel(const WindFarm& farm, Flow initial, const SolveOptions& options,
                Clock::time_point start) {
  const auto time_up = [&] {
    return options.limits.time && Clock::now() - start >= *options.limits.time;
  };

  Solution solution;
  solution.seed = options.seed;
  solution.flow = std::move(initial);
  solution.initial_cost = FlowCost(farm, solution.flow);
  Cost cost = solution.initial_cost;
  if (cost.IsInfinite()) throw InitializationError();

  auto graph = std::make_shared<const ResidualGraph>(farm);
  DeltaStrategy strategy(options.delta, farm.catalog().max_capacity(),
                         options.seed);
  ResidualView residual;
  residual.graph = graph;

  BellmanFordOptions bf_options;
  if (options.limits.time) bf_options.should_stop = time_up;

  std::optional<std::int64_t> delta = strategy.Initial();
  while (delta) {
    if (time_up()) {
      solution.stop = StopReason::kTimeLimit;
      break;
    }
    if (options.limits.iterations &&
        solution.iterations >= *options.limits.iterations) {
      solution.stop = StopReason::kIterationLimit;
      break;
    }
    ++solution.iterations;

    Flow& flow = solution.flow;
    residual.delta = *delta;
    ComputeResidualCosts(*graph, flow, *delta, residual.gamma);
    const LabelTable labels = RunTwoLabelBellmanFord(residual, bf_options);
    if (labels.aborted) {
      solution.stop = StopReason::kTimeLimit;
      break;
    }

    bool found = false;
    bool interrupted = false;
    if (!labels.converged) {
      for (ResidualEdgeIndex e = 0;
           e < static_cast<ResidualEdgeIndex>(graph->num_edges()) && !found;
           ++e) {
        if (time_up()) {
          interrupted = true;
          break;
        }
        const auto walk = ExtractNegativeClosedWalk(labels, residual, e);
        if (!walk) continue;
        for (const Cycle& cycle :
             DecomposeWalk(*graph, residual.gamma, *walk)) {
          if (!cycle.is_long()) continue;
          // Earlier cycles of the same walk may have changed the flow.
          const Cost gamma = CycleGamma(*graph, flow, *delta, cycle.edges);
          if (!gamma.IsNegative()) continue;
          Flow next = CancelCycle(*graph, flow, cycle, *delta);
          const Cost next_cost = cost + gamma;
          if (options.verify) {
            VerifyStep(farm, *graph, flow, next, cycle, gamma, cost,
                       next_cost);
          }
          if (options.on_cancel) {
            options.on_cancel({graph.get(), &flow, &next, &cycle.edges, *delta,
                               gamma, cost, next_cost});
          }
          flow = std::move(next);
          cost = next_cost;
          solution.trace.push_back(
              {solution.iterations, *delta, cycle.size(), gamma, cost});
          found = true;
        }
      }
    }
    if (interrupted && !found) {
      solution.stop = StopReason::kTimeLimit;
      break;
    }
    delta = strategy.Next(found);
  }

  solution.cost = cost;
  solution.cables = AssignCables(farm, solution.flow);
  solution.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return solution;
}

}  // namespace

Solution Solve(const WindFarm& farm, const SolveOptions& options) {
  const auto start = Clock::now();
  return Cancel(farm, InitializeFlow(farm, options.init), options, start);
}

Solution SolveFrom(const WindFarm& farm, Flow initial,
                   const SolveOptions& options) {
  const auto start = Clock::now();
  const FeasibilityReport report = CheckFeasible(farm, initial);
  if (!report.ok()) {
    throw InputError("initial flow is infeasible: " +
                     report.violations.front().message);
  }
  return Cancel(farm, std::move(initial), options, start);
}

const char* StopReasonName(StopReason reason) {
  switch (reason) {
    case StopReason::kExhausted:
      return "exhausted";
    case StopReason::kTimeLimit:
      return "time-limit";
    case StopReason::kIterationLimit:
      return "iteration-limit";
  }
  return "?";
}

std::string TraceCsv(const Solution& solution) {
  std::ostringstream out;
  out << "seed,iteration,delta,cycle_length,cycle_gamma,cost\n";
  for (const TraceStep& step : solution.trace) {
    out << solution.seed << ',' << step.iteration << ',' << step.delta << ','
        << step.cycle_length << ',' << step.cycle_gamma << ',' << step.cost
        << '\n';
  }
  return out.str();
}

}  // namespace wcp
