#include "wcp/io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "wcp/errors.h"

namespace wcp {

using nlohmann::json;

namespace {

const json& Field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw InputError(where + " must be an object");
  auto it = object.find(key);
  if (it == object.end()) {
    throw InputError(where + " is missing field \"" + key + "\"");
  }
  return *it;
}

std::int64_t IntField(const json& object, const char* key,
                      const std::string& where) {
  const json& value = Field(object, key, where);
  if (!value.is_number_integer()) {
    throw InputError(where + ": \"" + key + "\" must be an integer");
  }
  return value.get<std::int64_t>();
}

double NumberField(const json& object, const char* key,
                   const std::string& where) {
  const json& value = Field(object, key, where);
  if (!value.is_number()) {
    throw InputError(where + ": \"" + key + "\" must be a number");
  }
  return value.get<double>();
}

const json& ArrayField(const json& doc, const char* key) {
  const json& value = Field(doc, key, "instance");
  if (!value.is_array()) {
    throw InputError(std::string("instance: \"") + key + "\" must be an array");
  }
  return value;
}

}  // namespace

WindFarm InstanceFromJson(const json& doc) {
  std::vector<Vertex> vertices;
  for (const json& t : ArrayField(doc, "turbines")) {
    vertices.push_back({IntField(t, "id", "turbine"), NumberField(t, "x", "turbine"),
                        NumberField(t, "y", "turbine"), VertexKind::kTurbine, 0});
  }
  for (const json& s : ArrayField(doc, "substations")) {
    vertices.push_back({IntField(s, "id", "substation"),
                        NumberField(s, "x", "substation"),
                        NumberField(s, "y", "substation"), VertexKind::kSubstation,
                        IntField(s, "capacity", "substation")});
  }
  std::vector<EdgeSpec> edges;
  for (const json& e : ArrayField(doc, "edges")) {
    EdgeSpec spec{IntField(e, "u", "edge"), IntField(e, "v", "edge"), std::nullopt};
    auto length = e.find("length");
    if (length != e.end() && !length->is_null()) {
      if (!length->is_number()) throw InputError("edge: \"length\" must be a number");
      spec.length = ToFixed(length->get<double>());
    }
    edges.push_back(spec);
  }
  std::vector<CableType> cables;
  for (const json& c : ArrayField(doc, "cables")) {
    cables.push_back({IntField(c, "capacity", "cable"),
                      ToFixed(NumberField(c, "cost_per_length", "cable"))});
  }
  return WindFarm::Create(std::move(vertices), edges, std::move(cables));
}

json InstanceToJson(const WindFarm& farm) {
  json doc;
  doc["turbines"] = json::array();
  doc["substations"] = json::array();
  for (const Vertex& v : farm.vertices()) {
    if (v.is_substation()) {
      doc["substations"].push_back(
          {{"id", v.id}, {"x", v.x}, {"y", v.y}, {"capacity", v.capacity}});
    } else {
      doc["turbines"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}});
    }
  }
  doc["edges"] = json::array();
  for (const Edge& e : farm.edges()) {
    doc["edges"].push_back({{"u", farm.vertex(e.tail).id},
                            {"v", farm.vertex(e.head).id},
                            {"length", FromFixed(e.length)}});
  }
  doc["cables"] = json::array();
  for (const CableType& c : farm.catalog().cables()) {
    doc["cables"].push_back({{"capacity", c.capacity},
                             {"cost_per_length", FromFixed(c.cost_per_length)}});
  }
  return doc;
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

WindFarm LoadInstance(const std::filesystem::path& path) {
  return InstanceFromJson(ReadJsonFile(path));
}

void SaveInstance(const WindFarm& farm, const std::filesystem::path& path) {
  WriteTextFile(path, InstanceToJson(farm).dump(2) + "\n");
}

json SolutionToJson(const WindFarm& farm, const Flow& flow, Cost total_cost) {
  json doc;
  doc["edge_flows"] = json::array();
  doc["cable_assignment"] = json::array();
  const auto cables = AssignCables(farm, flow);
  for (std::size_t i = 0; i < farm.num_edges(); ++i) {
    const Edge& e = farm.edge(static_cast<EdgeIndex>(i));
    const VertexId u = farm.vertex(e.tail).id;
    const VertexId v = farm.vertex(e.head).id;
    doc["edge_flows"].push_back({{"u", u}, {"v", v}, {"flow", flow.edge_flow[i]}});
    json cable = nullptr;
    if (cables[i]) cable = *cables[i];
    doc["cable_assignment"].push_back({{"u", u}, {"v", v}, {"cable_index", cable}});
  }
  if (total_cost.IsInfinite()) {
    doc["total_cost"] = nullptr;
  } else {
    doc["total_cost"] = total_cost.ToDouble();
  }
  doc["total_cost_exact"] = total_cost.ToString();
  return doc;
}

std::vector<std::string> ValidateSolutionJson(const WindFarm& farm,
                                              const json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object()) return {"solution must be an object"};
  for (const char* key : {"edge_flows", "cable_assignment"}) {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_array()) {
      problems.push_back(std::string("\"") + key + "\" must be an array");
    } else if (it->size() != farm.num_edges()) {
      problems.push_back(std::string("\"") + key + "\" must list every edge");
    }
  }
  auto total = doc.find("total_cost");
  if (total == doc.end() || !(total->is_number() || total->is_null())) {
    problems.push_back("\"total_cost\" must be a number");
  }
  if (!problems.empty()) return problems;

  const auto cables = farm.catalog().cables();
  for (std::size_t i = 0; i < farm.num_edges(); ++i) {
    const Edge& e = farm.edge(static_cast<EdgeIndex>(i));
    const json& flow = doc["edge_flows"][i];
    const json& cable = doc["cable_assignment"][i];
    const std::string where = "edge " + std::to_string(i);
    for (const json* entry : {&flow, &cable}) {
      if (!entry->is_object() || !entry->contains("u") || !entry->contains("v") ||
          (*entry)["u"] != farm.vertex(e.tail).id ||
          (*entry)["v"] != farm.vertex(e.head).id) {
        problems.push_back(where + ": endpoints do not match the instance");
      }
    }
    if (!flow.is_object() || !flow.contains("flow") ||
        !flow["flow"].is_number_integer()) {
      problems.push_back(where + ": \"flow\" must be an integer");
      continue;
    }
    if (!cable.is_object() || !cable.contains("cable_index")) {
      problems.push_back(where + ": \"cable_index\" missing");
      continue;
    }
    const std::int64_t f = flow["flow"].get<std::int64_t>();
    const json& index = cable["cable_index"];
    if (index.is_null()) {
      if (f != 0) problems.push_back(where + ": flow without a cable");
    } else if (!index.is_number_unsigned() || index.get<std::size_t>() >= cables.size()) {
      problems.push_back(where + ": \"cable_index\" out of range");
    } else if (cables[index.get<std::size_t>()].capacity < std::llabs(f)) {
      problems.push_back(where + ": cable too small for the flow");
    }
  }
  return problems;
}

Flow FlowFromSolutionJson(const WindFarm& farm, const json& doc) {
  const auto problems = ValidateSolutionJson(farm, doc);
  if (!problems.empty()) throw InputError("invalid solution: " + problems.front());
  Flow flow = Flow::Zero(farm);
  for (std::size_t i = 0; i < farm.num_edges(); ++i) {
    flow.edge_flow[i] = doc["edge_flows"][i]["flow"].get<std::int64_t>();
  }
  for (VertexIndex s : farm.substations()) {
    flow.sub_inflow[farm.substation_ordinal(s)] = NetFlowAt(farm, flow, s);
  }
  return flow;
}

}  // namespace wcp
