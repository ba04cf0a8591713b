#include "wcp/init_strategy.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

#include "wcp/errors.h"

namespace wcp {

std::vector<InitStrategy> AllInitStrategies() {
  std::vector<InitStrategy> all;
  for (bool collecting : {false, true}) {
    for (PathMetric metric : {PathMetric::kUnit, PathMetric::kLength}) {
      for (SubstationTarget target :
           {SubstationTarget::kAny, SubstationTarget::kLast}) {
        all.push_back({metric, target, collecting});
      }
    }
  }
  return all;
}

std::string InitName(const InitStrategy& s) {
  std::string name = s.collecting ? "collecting-" : "";
  name += s.metric == PathMetric::kUnit ? "bfs" : "dijkstra";
  name += s.target == SubstationTarget::kAny ? "-any" : "-last";
  return name;
}

std::string InitAbbreviation(const InitStrategy& s) {
  std::string name = s.collecting ? "C-" : "";
  name += s.metric == PathMetric::kUnit ? "BFS" : "Dijk";
  name += s.target == SubstationTarget::kAny ? "-A" : "-L";
  return name;
}

std::optional<InitStrategy> ParseInitStrategy(std::string_view name) {
  std::string key;
  for (char ch : name) {
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (const InitStrategy& s : AllInitStrategies()) {
    std::string abbreviation = InitAbbreviation(s);
    for (char& ch : abbreviation) {
      ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (key == InitName(s) || key == abbreviation) return s;
  }
  return std::nullopt;
}

namespace {

// Flow on e in the direction leaving `from`.
std::int64_t FlowLeaving(const WindFarm& farm, const Flow& flow, EdgeIndex e,
                         VertexIndex from) {
  const std::int64_t f = flow.edge_flow[e];
  return farm.edge(e).tail == from ? f : -f;
}

VertexIndex OtherEnd(const WindFarm& farm, EdgeIndex e, VertexIndex v) {
  const Edge& edge = farm.edge(e);
  return edge.tail == v ? edge.head : edge.tail;
}

bool HasFreeCapacity(const WindFarm& farm, const Flow& flow, VertexIndex s) {
  return flow.sub_inflow[farm.substation_ordinal(s)] < farm.vertex(s).capacity;
}

}  // namespace

std::optional<SubstationPath> ShortestPathToSubstation(
    const WindFarm& farm, const Flow& flow, VertexIndex source,
    PathMetric metric, SubstationTarget target) {
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  const std::size_t n = farm.num_vertices();
  const std::int64_t max_capacity = farm.catalog().max_capacity();
  std::vector<std::int64_t> dist(n, kUnreached);
  std::vector<EdgeIndex> parent_edge(n, -1);
  std::vector<VertexIndex> parent(n, kNoVertex);
  std::vector<char> done(n, 0);

  using Entry = std::pair<std::int64_t, VertexIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[source] = 0;
  queue.push({0, source});
  while (!queue.empty()) {
    const auto [d, x] = queue.top();
    queue.pop();
    if (done[x]) continue;
    done[x] = 1;
    if (farm.is_substation(x)) continue;  // flow never leaves a substation
    for (EdgeIndex e : farm.incident(x)) {
      const VertexIndex y = OtherEnd(farm, e, x);
      if (done[y]) continue;
      if (FlowLeaving(farm, flow, e, x) + 1 > max_capacity) continue;
      if (farm.is_substation(y) && !HasFreeCapacity(farm, flow, y)) continue;
      const std::int64_t step =
          metric == PathMetric::kUnit ? 1 : farm.edge(e).length;
      const std::int64_t nd = d + step;
      if (nd < dist[y] || (nd == dist[y] && x < parent[y])) {
        dist[y] = nd;
        parent[y] = x;
        parent_edge[y] = e;
        queue.push({nd, y});
      }
    }
  }

  VertexIndex best = kNoVertex;
  for (VertexIndex s : farm.substations()) {
    if (dist[s] == kUnreached) continue;
    if (best == kNoVertex) {
      best = s;
    } else if (target == SubstationTarget::kAny ? dist[s] < dist[best]
                                                : dist[s] > dist[best]) {
      best = s;
    }
  }
  if (best == kNoVertex) return std::nullopt;

  SubstationPath path;
  path.distance = dist[best];
  for (VertexIndex v = best; v != source; v = parent[v]) {
    path.vertices.push_back(v);
    path.edges.push_back(parent_edge[v]);
  }
  path.vertices.push_back(source);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

Flow InitializeFlow(const WindFarm& farm, const InitStrategy& strategy) {
  Flow flow = Flow::Zero(farm);
  std::vector<char> routed(farm.num_vertices(), 0);
  const std::int64_t max_capacity = farm.catalog().max_capacity();

  for (VertexIndex t : farm.turbines()) {
    if (routed[t]) continue;
    auto path = ShortestPathToSubstation(farm, flow, t, strategy.metric,
                                         strategy.target);
    if (!path) {
      throw InitializationError(
          "no feasible initial flow of finite cost: turbine " +
          std::to_string(farm.vertex(t).id) +
          " cannot reach a substation with free capacity");
    }
    const std::size_t k = path->edges.size();
    const VertexIndex sub = path->vertices.back();
    const std::int32_t ordinal = farm.substation_ordinal(sub);

    // picks_upto[j]: units picked up at positions <= j.
    std::vector<std::int64_t> picks_upto(k, 0);
    std::int64_t picks = 1;
    routed[t] = 1;
    picks_upto[0] = 1;
    for (std::size_t i = 1; i < k; ++i) {
      const VertexIndex v = path->vertices[i];
      if (strategy.collecting && !routed[v] && !farm.is_substation(v)) {
        bool fits = flow.sub_inflow[ordinal] + picks + 1 <=
                    farm.vertex(sub).capacity;
        for (std::size_t j = i; fits && j < k; ++j) {
          const std::int64_t along =
              FlowLeaving(farm, flow, path->edges[j], path->vertices[j]);
          fits = along + picks + 1 <= max_capacity;
        }
        if (fits) {
          ++picks;
          routed[v] = 1;
        }
      }
      picks_upto[i] = picks;
    }

    for (std::size_t j = 0; j < k; ++j) {
      const EdgeIndex e = path->edges[j];
      const std::int64_t amount = picks_upto[j];
      flow.edge_flow[e] +=
          farm.edge(e).tail == path->vertices[j] ? amount : -amount;
    }
    flow.sub_inflow[ordinal] += picks;
  }
  return flow;
}

}  // namespace wcp
