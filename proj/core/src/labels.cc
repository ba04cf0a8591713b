#include "wcp/labels.h"

#include <utility>

namespace wcp {

const Label& LabelTable::UsableLabel(VertexIndex v,
                                     ResidualEdgeIndex reverse_of_next) const {
  const RelevantLabels& l = labels_[v];
  return l.first.parent != reverse_of_next ? l.first : l.second;
}

bool LabelTable::WouldImprove(VertexIndex v, Cost value,
                              ResidualEdgeIndex parent) const {
  if (value.IsInfinite()) return false;
  const RelevantLabels& l = labels_[v];
  if (l.first.parent == parent) return value < l.first.value;
  // A label from `parent` that is not relevant any more is at least
  // second.value, so the same test covers both remaining cases.
  return value < l.second.value;
}

bool LabelTable::Offer(VertexIndex v, Cost value, ResidualEdgeIndex parent) {
  if (!WouldImprove(v, value, parent)) return false;
  RelevantLabels& l = labels_[v];
  const Label fresh{value, parent, ++clock_};
  if (l.first.parent == parent) {
    l.first = fresh;
  } else if (l.second.parent == parent) {
    l.second = fresh;
    if (l.second.value < l.first.value) std::swap(l.first, l.second);
  } else if (value < l.first.value) {
    l.second = l.first;
    l.first = fresh;
  } else {
    l.second = fresh;
  }
  return true;
}

namespace {

// Candidate label at the head of e, or infinity.
Cost Candidate(const LabelTable& labels, const ResidualGraph& graph,
               const std::vector<Cost>& gamma, ResidualEdgeIndex e) {
  const Cost g = gamma[e];
  if (g.IsInfinite()) return Cost::Infinite();
  const ResidualEdge& edge = graph.edge(e);
  const Label& from = labels.UsableLabel(edge.tail, edge.reverse);
  if (from.value.IsInfinite()) return Cost::Infinite();
  return from.value + g;
}

}  // namespace

LabelTable RunTwoLabelBellmanFord(const ResidualView& residual,
                                  const BellmanFordOptions& options) {
  const ResidualGraph& graph = *residual.graph;
  const auto& gamma = residual.gamma;
  const std::size_t n = graph.num_vertices();
  LabelTable labels(n);
  std::vector<char> dirty(n, 0);

  // Every edge on its own is a walk of length gamma(e).
  for (ResidualEdgeIndex e = 0; e < static_cast<ResidualEdgeIndex>(gamma.size());
       ++e) {
    const VertexIndex head = graph.edge(e).head;
    if (labels.Offer(head, gamma[e], e)) dirty[head] = 1;
  }

  const int max_rounds = static_cast<int>(2 * n);
  for (int round = 1; round <= max_rounds; ++round) {
    if (options.should_stop && options.should_stop()) {
      labels.aborted = true;
      return labels;
    }
    labels.rounds = round;
    bool changed = false;
    for (VertexIndex u = 0; u < static_cast<VertexIndex>(n); ++u) {
      if (options.skip_unchanged && !dirty[u]) continue;
      dirty[u] = 0;
      for (ResidualEdgeIndex e = graph.out_begin(u); e < graph.out_end(u);
           ++e) {
        const Cost candidate = Candidate(labels, graph, gamma, e);
        const VertexIndex head = graph.edge(e).head;
        if (labels.Offer(head, candidate, e)) {
          dirty[head] = 1;
          changed = true;
        }
      }
    }
    if (!changed && options.early_exit) {
      labels.converged = true;
      return labels;
    }
  }

  labels.converged = true;
  for (ResidualEdgeIndex e = 0; e < static_cast<ResidualEdgeIndex>(gamma.size());
       ++e) {
    if (CanRelax(labels, residual, e)) {
      labels.converged = false;
      break;
    }
  }
  return labels;
}

bool CanRelax(const LabelTable& labels, const ResidualView& residual,
              ResidualEdgeIndex e) {
  const ResidualGraph& graph = *residual.graph;
  const Cost candidate = Candidate(labels, graph, residual.gamma, e);
  return labels.WouldImprove(graph.edge(e).head, candidate, e);
}

}  // namespace wcp
