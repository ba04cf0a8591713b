#include "wcp/residual.h"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "wcp/errors.h"

namespace wcp {

ResidualGraph::ResidualGraph(const WindFarm& farm) : farm_(&farm) {
  const VertexIndex super = super_substation();
  edges_.reserve(2 * farm.num_edges() + 2 * farm.num_substations());
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(farm.num_edges()); ++e) {
    const Edge& edge = farm.edge(e);
    edges_.push_back({edge.tail, edge.head, ResidualKind::kForward, e});
    edges_.push_back({edge.head, edge.tail, ResidualKind::kBackward, e});
  }
  for (VertexIndex s : farm.substations()) {
    const std::int32_t ordinal = farm.substation_ordinal(s);
    edges_.push_back({s, super, ResidualKind::kToSuper, ordinal});
    edges_.push_back({super, s, ResidualKind::kFromSuper, ordinal});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const ResidualEdge& a, const ResidualEdge& b) {
              return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
            });

  // Pair every edge with its reverse. No two parallel arcs exist, so the
  // reverse is the unique edge with swapped endpoints.
  const std::size_t n = num_vertices();
  first_out_.assign(n + 1, 0);
  for (const ResidualEdge& e : edges_) ++first_out_[e.tail + 1];
  for (std::size_t v = 0; v < n; ++v) first_out_[v + 1] += first_out_[v];
  in_edges_.resize(n);
  for (ResidualEdgeIndex i = 0; i < static_cast<ResidualEdgeIndex>(edges_.size());
       ++i) {
    ResidualEdge& e = edges_[i];
    in_edges_[e.head].push_back(i);
    auto first = edges_.begin() + first_out_[e.head];
    auto last = edges_.begin() + first_out_[e.head + 1];
    auto it = std::lower_bound(
        first, last, e.tail,
        [](const ResidualEdge& x, VertexIndex head) { return x.head < head; });
    if (it == last || it->head != e.tail) {
      throw InvariantError("residual edge without reverse");
    }
    e.reverse = static_cast<ResidualEdgeIndex>(it - edges_.begin());
  }
}

std::string ResidualGraph::VertexName(VertexIndex v) const {
  if (v == super_substation()) return "s";
  return std::to_string(farm_->vertex(v).id);
}

std::int64_t DirectedFlow(const Flow& flow, const ResidualEdge& e) {
  switch (e.kind) {
    case ResidualKind::kForward:
      return flow.edge_flow[e.ref];
    case ResidualKind::kBackward:
      return -flow.edge_flow[e.ref];
    case ResidualKind::kToSuper:
      return flow.sub_inflow[e.ref];
    case ResidualKind::kFromSuper:
      return -flow.sub_inflow[e.ref];
  }
  return 0;
}

Cost ResidualCost(const WindFarm& farm, const Flow& flow, std::int64_t delta,
                  const ResidualEdge& e) {
  if (delta < 1) throw InputError("delta must be a positive integer");
  switch (e.kind) {
    case ResidualKind::kToSuper: {
      const VertexIndex s = farm.substations()[e.ref];
      return flow.sub_inflow[e.ref] + delta <= farm.vertex(s).capacity
                 ? Cost::Zero()
                 : Cost::Infinite();
    }
    case ResidualKind::kFromSuper:
      return flow.sub_inflow[e.ref] >= delta ? Cost::Zero()
                                             : Cost::Infinite();
    case ResidualKind::kForward:
    case ResidualKind::kBackward:
      break;
  }
  const std::int64_t current = DirectedFlow(flow, e);
  // Leaving a substation towards a turbine only undoes inflow.
  if (farm.is_substation(e.tail) && -current < delta) return Cost::Infinite();

  const CostFunction& c = farm.catalog();
  const auto after = c.Evaluate(current + delta);
  if (!after) return Cost::Infinite();
  const auto before = c.Evaluate(current);
  if (!before) return Cost::Infinite();
  const std::int64_t length = farm.edge(e.ref).length;
  return Cost::Product(*after - *before, length);
}

void ComputeResidualCosts(const ResidualGraph& graph, const Flow& flow,
                          std::int64_t delta, std::vector<Cost>& gamma) {
  if (delta < 1) throw InputError("delta must be a positive integer");
  gamma.resize(graph.num_edges());
  for (std::size_t i = 0; i < graph.num_edges(); ++i) {
    gamma[i] = ResidualCost(graph.farm(), flow, delta, graph.edges()[i]);
  }
}

ResidualView BuildResidual(std::shared_ptr<const ResidualGraph> graph,
                           const Flow& flow, std::int64_t delta) {
  ResidualView view;
  view.delta = delta;
  ComputeResidualCosts(*graph, flow, delta, view.gamma);
  view.graph = std::move(graph);
  return view;
}

ResidualView BuildResidual(const WindFarm& farm, const Flow& flow,
                           std::int64_t delta) {
  return BuildResidual(std::make_shared<const ResidualGraph>(farm), flow,
                       delta);
}

std::string ResidualCsv(const ResidualView& view) {
  std::ostringstream out;
  out << "u,v,gamma\n";
  const ResidualGraph& graph = *view.graph;
  for (std::size_t i = 0; i < graph.num_edges(); ++i) {
    const ResidualEdge& e = graph.edges()[i];
    out << graph.VertexName(e.tail) << ',' << graph.VertexName(e.head) << ','
        << view.gamma[i] << '\n';
  }
  return out.str();
}

}  // namespace wcp
