#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcp/delta_strategy.h"
#include "wcp/farm.h"
#include "wcp/init_strategy.h"
#include "wcp/solver.h"

namespace wcp {

struct Variant {
  InitStrategy init;
  DeltaKind delta = DeltaKind::kIncDec;
};

// All 64 pairs, initialization-major.
std::vector<Variant> AllVariants();

struct NamedInstance {
  std::string name;
  WindFarm farm;
};

struct ExperimentRow {
  std::string instance;
  std::string init;   // kebab name
  std::string delta;  // kebab name
  std::uint64_t seed = 0;
  std::optional<Cost> cost;  // empty when the run failed
  double wall_ms = 0.0;
  std::int64_t iterations = 0;
  std::int64_t cancels = 0;
  std::string status;  // stop reason or "error: ..."
};

struct ExperimentOptions {
  std::vector<Variant> variants;
  SolveLimits limits;
  std::uint64_t seed = 0;
  int jobs = 1;
  // Instances already present in a previous result table.
  std::set<std::string> skip;
};

// Runs every variant on every instance. Rows come out in instance order, then
// variant order, regardless of the number of jobs. Solver failures become
// rows with an error status.
std::vector<ExperimentRow> RunExperiment(
    const std::vector<NamedInstance>& instances, const ExperimentOptions& options,
    const std::function<void(const ExperimentRow&)>& on_row = {});

// "instance,init,delta,seed,cost,wall_ms,iterations,cancels,status".
// Without timing the wall_ms column is left empty, which makes reruns with the
// same seeds byte-identical.
std::string ExperimentCsv(const std::vector<ExperimentRow>& rows,
                          bool omit_timing = false, bool header = true);
std::vector<ExperimentRow> ParseExperimentCsv(std::string_view text);

// Per (instance, delta): the mean cost over all initializations that
// succeeded. Keys are (instance, delta name).
std::map<std::pair<std::string, std::string>, double> MeanOverInitializations(
    const std::vector<ExperimentRow>& rows);

// Cost per instance for one variant, in the order of `instances`; instances
// without a successful run are nullopt.
std::vector<std::optional<double>> CostsFor(
    const std::vector<ExperimentRow>& rows,
    const std::vector<std::string>& instances, std::string_view init,
    std::string_view delta);

}  // namespace wcp
