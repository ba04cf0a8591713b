#include "wcp/farm.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "wcp/errors.h"

namespace wcp {

CostFunction::CostFunction(std::vector<CableType> cables)
    : cables_(std::move(cables)) {
  if (cables_.empty()) throw InputError("cable catalog is empty");
  for (std::size_t k = 0; k < cables_.size(); ++k) {
    const CableType& cable = cables_[k];
    if (cable.capacity < 1) {
      throw InputError("cable " + std::to_string(k) +
                       " has non-positive capacity");
    }
    if (cable.cost_per_length < 0) {
      throw InputError("cable " + std::to_string(k) + " has negative cost");
    }
    if (k == 0) continue;
    const CableType& prev = cables_[k - 1];
    if (cable.capacity <= prev.capacity) {
      throw InputError("cable capacities must be strictly increasing (cable " +
                       std::to_string(k) + ")");
    }
    if (cable.cost_per_length <= prev.cost_per_length) {
      throw InputError("cable " + std::to_string(k - 1) +
                       " is dominated: cable " + std::to_string(k) +
                       " has larger capacity at no higher cost");
    }
  }
}

std::optional<std::size_t> CostFunction::CableFor(std::int64_t amount) const {
  const std::int64_t magnitude = amount < 0 ? -amount : amount;
  if (magnitude == 0) return std::nullopt;
  auto it = std::lower_bound(
      cables_.begin(), cables_.end(), magnitude,
      [](const CableType& c, std::int64_t x) { return c.capacity < x; });
  if (it == cables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cables_.begin());
}

std::optional<std::int64_t> CostFunction::Evaluate(std::int64_t amount) const {
  if (amount == 0) return 0;
  const auto cable = CableFor(amount);
  if (!cable) return std::nullopt;
  return cables_[*cable].cost_per_length;
}

std::optional<std::int64_t> CostFunction::Evaluate(double amount) const {
  const double magnitude = std::fabs(amount);
  if (magnitude == 0.0) return 0;
  if (magnitude > static_cast<double>(max_capacity())) return std::nullopt;
  return Evaluate(static_cast<std::int64_t>(std::ceil(magnitude)));
}

Cost CostFunction::EdgeCost(std::int64_t amount, std::int64_t length) const {
  const auto per_length = Evaluate(amount);
  if (!per_length) return Cost::Infinite();
  return Cost::Product(*per_length, length);
}

std::int64_t EuclideanLength(const Vertex& a, const Vertex& b) {
  return ToFixed(std::hypot(a.x - b.x, a.y - b.y));
}

WindFarm WindFarm::Create(std::vector<Vertex> vertices,
                          std::span<const EdgeSpec> edges,
                          std::vector<CableType> cables) {
  WindFarm farm;
  farm.catalog_ = CostFunction(std::move(cables));

  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    if (i > 0 && vertices[i - 1].id == v.id) {
      throw InputError("duplicate vertex id " + std::to_string(v.id));
    }
    if (v.is_substation() && v.capacity < 1) {
      throw InputError("substation " + std::to_string(v.id) +
                       " has non-positive capacity");
    }
    if (!v.is_substation() && v.capacity != 0) {
      throw InputError("turbine " + std::to_string(v.id) +
                       " must not carry a capacity");
    }
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw InputError("vertex " + std::to_string(v.id) +
                       " has non-finite coordinates");
    }
  }
  farm.vertices_ = std::move(vertices);

  const auto n = static_cast<VertexIndex>(farm.vertices_.size());
  farm.substation_ordinal_.assign(n, -1);
  farm.incident_.resize(n);
  for (VertexIndex v = 0; v < n; ++v) {
    farm.index_of_.emplace(farm.vertices_[v].id, v);
    if (farm.vertices_[v].is_substation()) {
      farm.substation_ordinal_[v] =
          static_cast<std::int32_t>(farm.substations_.size());
      farm.substations_.push_back(v);
    } else {
      farm.turbines_.push_back(v);
    }
  }

  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  farm.edges_.reserve(edges.size());
  for (const EdgeSpec& spec : edges) {
    const auto tail = farm.Find(spec.u);
    const auto head = farm.Find(spec.v);
    const std::string name =
        "(" + std::to_string(spec.u) + ", " + std::to_string(spec.v) + ")";
    if (!tail || !head) throw InputError("edge " + name + ": unknown vertex");
    if (*tail == *head) throw InputError("edge " + name + " is a self-loop");
    if (farm.is_substation(*tail) && farm.is_substation(*head)) {
      throw InputError("edge " + name + " connects two substations");
    }
    const auto key = std::minmax(*tail, *head);
    if (!seen.insert(key).second) {
      throw InputError("edge " + name +
                       " duplicates an existing edge or its reverse");
    }
    std::int64_t length = 0;
    if (spec.length) {
      if (*spec.length < 0) {
        throw InputError("edge " + name + " has negative length");
      }
      length = *spec.length;
    } else {
      length = EuclideanLength(farm.vertices_[*tail], farm.vertices_[*head]);
    }
    const auto e = static_cast<EdgeIndex>(farm.edges_.size());
    farm.edges_.push_back(Edge{*tail, *head, length});
    farm.incident_[*tail].push_back(e);
    farm.incident_[*head].push_back(e);
  }
  return farm;
}

std::int64_t WindFarm::total_substation_capacity() const {
  std::int64_t total = 0;
  for (VertexIndex s : substations_) total += vertices_[s].capacity;
  return total;
}

std::optional<VertexIndex> WindFarm::Find(VertexId id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

VertexIndex WindFarm::IndexOf(VertexId id) const {
  auto index = Find(id);
  if (!index) throw InputError("unknown vertex id " + std::to_string(id));
  return *index;
}

}  // namespace wcp
