#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wcp/cost.h"
#include "wcp/farm.h"
#include "wcp/flow.h"

namespace wcp {

using ResidualEdgeIndex = std::int32_t;
inline constexpr ResidualEdgeIndex kNoResidualEdge = -1;

enum class ResidualKind : std::uint8_t {
  kForward,    // original edge, tail to head
  kBackward,   // original edge, head to tail
  kToSuper,    // substation to super substation
  kFromSuper,  // super substation to substation
};

struct ResidualEdge {
  VertexIndex tail = kNoVertex;
  VertexIndex head = kNoVertex;
  ResidualKind kind = ResidualKind::kForward;
  // Original edge for kForward/kBackward, substation ordinal otherwise.
  std::int32_t ref = -1;
  ResidualEdgeIndex reverse = kNoResidualEdge;
};

// Topology of the residual graph: the farm's vertices plus the super
// substation, both directions of every edge, and a pair of arcs between each
// substation and the super substation. Edges are sorted by (tail, head).
// Independent of flow and delta, so it is built once per farm.
class ResidualGraph {
 public:
  // The farm must outlive the graph.
  explicit ResidualGraph(const WindFarm& farm);

  const WindFarm& farm() const { return *farm_; }
  std::size_t num_vertices() const { return farm_->num_vertices() + 1; }
  VertexIndex super_substation() const {
    return static_cast<VertexIndex>(farm_->num_vertices());
  }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const ResidualEdge> edges() const { return edges_; }
  const ResidualEdge& edge(ResidualEdgeIndex e) const { return edges_[e]; }

  // Contiguous range of edges leaving v.
  ResidualEdgeIndex out_begin(VertexIndex v) const { return first_out_[v]; }
  ResidualEdgeIndex out_end(VertexIndex v) const { return first_out_[v + 1]; }
  std::span<const ResidualEdgeIndex> in_edges(VertexIndex v) const {
    return in_edges_[v];
  }

  // External id of a residual vertex, "s" for the super substation.
  std::string VertexName(VertexIndex v) const;

 private:
  const WindFarm* farm_;
  std::vector<ResidualEdge> edges_;
  std::vector<ResidualEdgeIndex> first_out_;
  std::vector<std::vector<ResidualEdgeIndex>> in_edges_;
};

// Change of total cable cost from pushing delta more units along e, infinite when
// the change would break feasibility or exceed the largest cable:
//   (u, s): 0 iff sub_inflow(u) + delta <= cap(u)
//   (s, u): 0 iff sub_inflow(u) >= delta
//   substation u to turbine v: infinite if the flow from v into u is below
//     delta, otherwise the general rule
//   otherwise: (c(|f(e) + delta|) - c(|f(e)|)) * len(e), f(reverse) = -f(e)
// Throws InputError if delta < 1.
Cost ResidualCost(const WindFarm& farm, const Flow& flow, std::int64_t delta,
                  const ResidualEdge& e);

struct ResidualView {
  std::shared_ptr<const ResidualGraph> graph;
  std::int64_t delta = 0;
  std::vector<Cost> gamma;  // indexed by ResidualEdgeIndex
};

// Fills gamma for every residual edge.
void ComputeResidualCosts(const ResidualGraph& graph, const Flow& flow,
                          std::int64_t delta, std::vector<Cost>& gamma);

ResidualView BuildResidual(std::shared_ptr<const ResidualGraph> graph,
                           const Flow& flow, std::int64_t delta);
ResidualView BuildResidual(const WindFarm& farm, const Flow& flow,
                           std::int64_t delta);

// Flow currently carried in the direction of residual edge e; for arcs at the
// super substation this is the substation's forwarded amount, signed.
std::int64_t DirectedFlow(const Flow& flow, const ResidualEdge& e);

// CSV "u,v,gamma" with a header line, one row per residual edge.
std::string ResidualCsv(const ResidualView& view);

}  // namespace wcp
