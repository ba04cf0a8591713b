#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "wcp/cost.h"

namespace wcp {

using VertexIndex = std::int32_t;
using EdgeIndex = std::int32_t;
using VertexId = std::int64_t;

inline constexpr VertexIndex kNoVertex = -1;

struct CableType {
  std::int64_t capacity = 0;
  std::int64_t cost_per_length = 0;  // fixed-point, 1e-6 units

  friend bool operator==(const CableType&, const CableType&) = default;
};

// Non-decreasing, left-continuous step function induced by a cable catalog.
// Cost at amount x is the per-length cost of the cheapest cable whose
// capacity is at least ceil(x); zero at zero, infinite beyond the largest.
class CostFunction {
 public:
  CostFunction() = default;
  // Throws InputError unless capacities and costs are both strictly
  // increasing and every capacity is positive.
  explicit CostFunction(std::vector<CableType> cables);

  std::span<const CableType> cables() const { return cables_; }
  std::int64_t max_capacity() const {
    return cables_.empty() ? 0 : cables_.back().capacity;
  }

  // Index of the cheapest cable able to carry |amount|; nullopt for zero
  // flow and for amounts beyond the largest cable.
  std::optional<std::size_t> CableFor(std::int64_t amount) const;

  // Per-length cost in fixed units, nullopt when infinite.
  std::optional<std::int64_t> Evaluate(std::int64_t amount) const;
  std::optional<std::int64_t> Evaluate(double amount) const;

  // c(|amount|) * length.
  Cost EdgeCost(std::int64_t amount, std::int64_t length) const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  std::vector<CableType> cables_;
};

enum class VertexKind { kTurbine, kSubstation };

struct Vertex {
  VertexId id = 0;
  double x = 0.0;
  double y = 0.0;
  VertexKind kind = VertexKind::kTurbine;
  std::int64_t capacity = 0;  // substations only

  bool is_substation() const { return kind == VertexKind::kSubstation; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  VertexIndex tail = kNoVertex;
  VertexIndex head = kNoVertex;
  std::int64_t length = 0;  // fixed-point

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge as given in an instance; endpoints by external id.
struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  std::optional<std::int64_t> length;  // fixed-point; Euclidean if missing
};

// Immutable problem instance. Vertices are stored in ascending id order, so
// comparing indices compares ids.
class WindFarm {
 public:
  // Validates every instance invariant and throws InputError on violation.
  static WindFarm Create(std::vector<Vertex> vertices,
                         std::span<const EdgeSpec> edges,
                         std::vector<CableType> cables);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_turbines() const { return turbines_.size(); }
  std::size_t num_substations() const { return substations_.size(); }

  const Vertex& vertex(VertexIndex v) const { return vertices_[v]; }
  std::span<const Vertex> vertices() const { return vertices_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const VertexIndex> turbines() const { return turbines_; }
  std::span<const VertexIndex> substations() const { return substations_; }
  std::span<const EdgeIndex> incident(VertexIndex v) const {
    return incident_[v];
  }
  const CostFunction& catalog() const { return catalog_; }

  bool is_substation(VertexIndex v) const {
    return vertices_[v].is_substation();
  }
  // Position of v in substations(), or -1 for turbines.
  std::int32_t substation_ordinal(VertexIndex v) const {
    return substation_ordinal_[v];
  }
  std::int64_t total_substation_capacity() const;

  // Throws InputError for an unknown id.
  VertexIndex IndexOf(VertexId id) const;
  std::optional<VertexIndex> Find(VertexId id) const;

  friend bool operator==(const WindFarm& a, const WindFarm& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.catalog_ == b.catalog_;
  }

 private:
  WindFarm() = default;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  CostFunction catalog_;
  std::vector<VertexIndex> turbines_;
  std::vector<VertexIndex> substations_;
  std::vector<std::int32_t> substation_ordinal_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::unordered_map<VertexId, VertexIndex> index_of_;
};

std::int64_t EuclideanLength(const Vertex& a, const Vertex& b);

}  // namespace wcp
