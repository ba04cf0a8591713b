#include "wcp/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "wcp/errors.h"

namespace wcp {

namespace {

// Cheapest cable able to carry |amount|, scanning the whole catalog.
std::optional<std::size_t> CheapestAdequate(std::span<const CableType> cables,
                                            std::int64_t amount) {
  const std::int64_t magnitude = std::llabs(amount);
  if (magnitude == 0) return std::nullopt;
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < cables.size(); ++k) {
    if (cables[k].capacity < magnitude) continue;
    if (!best || cables[k].cost_per_length < cables[*best].cost_per_length) {
      best = k;
    }
  }
  return best;
}

class Enumerator {
 public:
  explicit Enumerator(const WindFarm& farm)
      : farm_(farm),
        bound_(std::min<std::int64_t>(farm.catalog().max_capacity(),
                                      static_cast<std::int64_t>(
                                          farm.num_turbines()))),
        net_(farm.num_vertices(), 0),
        remaining_(farm.num_vertices(), 0),
        flow_(farm.num_edges(), 0) {
    BuildOrder();
    BuildCostTable();
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(farm.num_vertices());
         ++v) {
      remaining_[v] = static_cast<std::int64_t>(farm.incident(v).size());
    }
  }

  OracleResult Run() {
    // Isolated vertices are complete from the start.
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(farm_.num_vertices());
         ++v) {
      if (!VertexOk(v)) return {};
    }
    Search(0, Cost::Zero());
    OracleResult result;
    result.nodes_visited = nodes_;
    if (!best_flow_) return result;
    result.feasible = true;
    result.cost = best_cost_;
    result.flow = Flow::Zero(farm_);
    result.flow.edge_flow = *best_flow_;
    for (VertexIndex s : farm_.substations()) {
      std::int64_t net = 0;
      for (EdgeIndex e : farm_.incident(s)) {
        net += farm_.edge(e).head == s ? result.flow.edge_flow[e]
                                       : -result.flow.edge_flow[e];
      }
      result.flow.sub_inflow[farm_.substation_ordinal(s)] = net;
    }
    result.cables.resize(farm_.num_edges());
    for (std::size_t e = 0; e < farm_.num_edges(); ++e) {
      result.cables[e] =
          CheapestAdequate(farm_.catalog().cables(), result.flow.edge_flow[e]);
    }
    return result;
  }

 private:
  // Edges ordered so that vertices close to the substations are completed
  // early, which lets conservation prune the search.
  void BuildOrder() {
    const std::size_t n = farm_.num_vertices();
    std::vector<std::size_t> position(n, n);
    std::deque<VertexIndex> queue;
    std::size_t next = 0;
    auto visit = [&](VertexIndex v) {
      if (position[v] != n) return;
      position[v] = next++;
      queue.push_back(v);
    };
    for (VertexIndex s : farm_.substations()) visit(s);
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(n); ++v) {
      if (queue.empty()) visit(v);
      while (!queue.empty()) {
        const VertexIndex x = queue.front();
        queue.pop_front();
        for (EdgeIndex e : farm_.incident(x)) {
          const Edge& edge = farm_.edge(e);
          visit(edge.tail == x ? edge.head : edge.tail);
        }
      }
    }
    order_.resize(farm_.num_edges());
    for (std::size_t e = 0; e < order_.size(); ++e) {
      order_[e] = static_cast<EdgeIndex>(e);
    }
    auto key = [&](EdgeIndex e) {
      const Edge& edge = farm_.edge(e);
      const auto [lo, hi] = std::minmax(position[edge.tail], position[edge.head]);
      return std::pair(hi, lo);
    };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](EdgeIndex a, EdgeIndex b) { return key(a) < key(b); });
  }

  void BuildCostTable() {
    const auto cables = farm_.catalog().cables();
    cost_.resize(farm_.num_edges());
    for (std::size_t e = 0; e < farm_.num_edges(); ++e) {
      cost_[e].resize(static_cast<std::size_t>(2 * bound_ + 1));
      for (std::int64_t f = -bound_; f <= bound_; ++f) {
        const auto cable = CheapestAdequate(cables, f);
        Cost c = Cost::Zero();
        if (f != 0) {
          c = cable ? Cost::FromRaw(static_cast<Cost::Rep>(
                                        cables[*cable].cost_per_length) *
                                    farm_.edge(e).length)
                    : Cost::Infinite();
        }
        cost_[e][static_cast<std::size_t>(f + bound_)] = c;
      }
    }
  }

  bool VertexOk(VertexIndex v) const {
    const std::int64_t n = net_[v];
    const std::int64_t slack = bound_ * remaining_[v];
    if (farm_.is_substation(v)) {
      // Every incident edge points into v, so the net only grows.
      return n <= farm_.vertex(v).capacity;
    }
    return std::llabs(-1 - n) <= slack;
  }

  void Search(std::size_t depth, Cost partial) {
    ++nodes_;
    if (depth == order_.size()) {
      if (!best_flow_ || partial < best_cost_ ||
          (partial == best_cost_ && flow_ < *best_flow_)) {
        best_cost_ = partial;
        best_flow_ = flow_;
      }
      return;
    }
    const EdgeIndex e = order_[depth];
    const Edge& edge = farm_.edge(e);
    std::int64_t lo = -bound_;
    std::int64_t hi = bound_;
    if (farm_.is_substation(edge.head)) lo = std::max<std::int64_t>(lo, 0);
    if (farm_.is_substation(edge.tail)) hi = std::min<std::int64_t>(hi, 0);

    --remaining_[edge.tail];
    --remaining_[edge.head];
    for (std::int64_t f = lo; f <= hi; ++f) {
      const Cost step = cost_[e][static_cast<std::size_t>(f + bound_)];
      if (step.IsInfinite()) continue;
      const Cost total = partial + step;
      if (best_flow_ && total > best_cost_) continue;
      net_[edge.tail] -= f;
      net_[edge.head] += f;
      if (VertexOk(edge.tail) && VertexOk(edge.head)) {
        flow_[e] = f;
        Search(depth + 1, total);
        flow_[e] = 0;
      }
      net_[edge.tail] += f;
      net_[edge.head] -= f;
    }
    ++remaining_[edge.tail];
    ++remaining_[edge.head];
  }

  const WindFarm& farm_;
  const std::int64_t bound_;
  std::vector<EdgeIndex> order_;
  std::vector<std::vector<Cost>> cost_;
  std::vector<std::int64_t> net_;
  std::vector<std::int64_t> remaining_;
  std::vector<std::int64_t> flow_;
  std::optional<std::vector<std::int64_t>> best_flow_;
  Cost best_cost_ = Cost::Infinite();
  std::size_t nodes_ = 0;
};

}  // namespace

OracleResult SolveExactly(const WindFarm& farm, const OracleLimits& limits) {
  if (farm.num_turbines() > limits.max_turbines ||
      farm.num_edges() > limits.max_edges) {
    throw OracleRefusal(
        "instance too large for exact enumeration: " +
        std::to_string(farm.num_turbines()) + " turbines, " +
        std::to_string(farm.num_edges()) + " edges (limits " +
        std::to_string(limits.max_turbines) + ", " +
        std::to_string(limits.max_edges) + ")");
  }
  return Enumerator(farm).Run();
}

Cost OracleCostOf(const WindFarm& farm, const Flow& flow) {
  const auto cables = farm.catalog().cables();
  Cost::Rep total = 0;
  for (std::size_t e = 0; e < farm.num_edges(); ++e) {
    const std::int64_t f = flow.edge_flow[e];
    if (f == 0) continue;
    const auto cable = CheapestAdequate(cables, f);
    if (!cable) return Cost::Infinite();
    total += static_cast<Cost::Rep>(cables[*cable].cost_per_length) *
             farm.edge(e).length;
  }
  return Cost::FromRaw(total);
}

}  // namespace wcp
