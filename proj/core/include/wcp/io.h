#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wcp/cost.h"
#include "wcp/farm.h"
#include "wcp/flow.h"

namespace wcp {

// Instance schema:
//   {"turbines":    [{"id", "x", "y"}],
//    "substations": [{"id", "x", "y", "capacity"}],
//    "edges":       [{"u", "v", "length"?}],
//    "cables":      [{"capacity", "cost_per_length"}]}
// Ids are integers. A missing length means the Euclidean distance.
// Throws InputError on any schema or instance-invariant violation.
WindFarm InstanceFromJson(const nlohmann::json& doc);
// Writes every length explicitly, so loading the result gives an equal farm.
nlohmann::json InstanceToJson(const WindFarm& farm);

WindFarm LoadInstance(const std::filesystem::path& path);
void SaveInstance(const WindFarm& farm, const std::filesystem::path& path);

// Solution schema:
//   {"edge_flows":       [{"u", "v", "flow"}],
//    "cable_assignment": [{"u", "v", "cable_index"}],   null if unused
//    "total_cost":       number,
//    "total_cost_exact": string}
// Edges appear in instance order with their stored orientation.
nlohmann::json SolutionToJson(const WindFarm& farm, const Flow& flow,
                              Cost total_cost);

// Structural check of a solution document against the schema and the farm.
// Returns one message per problem; empty means valid.
std::vector<std::string> ValidateSolutionJson(const WindFarm& farm,
                                              const nlohmann::json& doc);

// Reads edge_flows back into a Flow (sub_inflow derived from net flows).
Flow FlowFromSolutionJson(const WindFarm& farm, const nlohmann::json& doc);

nlohmann::json ReadJsonFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace wcp
