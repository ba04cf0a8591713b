#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wcp/cost.h"
#include "wcp/residual.h"

namespace wcp {

// A distance label at a residual vertex: the gamma-length of some U-turn-free
// walk whose last edge is `parent`.
struct Label {
  Cost value = Cost::Infinite();
  ResidualEdgeIndex parent = kNoResidualEdge;
  std::uint64_t age = 0;  // global update counter at the last change
};

// The two smallest labels over distinct incoming edges. first.value <=
// second.value, and on equal values `first` is the older label.
struct RelevantLabels {
  Label first;
  Label second;
};

class LabelTable {
 public:
  explicit LabelTable(std::size_t num_vertices) : labels_(num_vertices) {}

  const RelevantLabels& at(VertexIndex v) const { return labels_[v]; }
  std::size_t size() const { return labels_.size(); }

  // Label usable for leaving `v` along an edge whose reverse is
  // `reverse_of_next`: the first label unless its parent is that reverse.
  const Label& UsableLabel(VertexIndex v,
                           ResidualEdgeIndex reverse_of_next) const;

  // Whether offering `value` via edge `parent` would change the relevant
  // labels at v. Ties keep the incumbent.
  bool WouldImprove(VertexIndex v, Cost value,
                    ResidualEdgeIndex parent) const;
  // Applies the offer, stamping a fresh age. Returns whether anything changed.
  bool Offer(VertexIndex v, Cost value, ResidualEdgeIndex parent);

  std::uint64_t clock() const { return clock_; }

  // Set by the search.
  bool converged = false;
  bool aborted = false;
  int rounds = 0;

 private:
  std::vector<RelevantLabels> labels_;
  std::uint64_t clock_ = 0;
};

struct BellmanFordOptions {
  // Stop as soon as a round changes no label.
  bool early_exit = true;
  // Skip the out-edges of vertices whose labels did not change since their
  // last scan.
  bool skip_unchanged = true;
  // Polled once per round; returning true abandons the search.
  std::function<bool()> should_stop;
};

// Bellman-Ford on the U-turn-free line graph of the residual graph, simulated
// with two labels per residual vertex. Runs at most 2 * |V(R)| rounds. If it
// stops without converging, some edge is still relaxable and a negative
// closed walk without U-turns exists.
LabelTable RunTwoLabelBellmanFord(const ResidualView& residual,
                                  const BellmanFordOptions& options = {});

// Whether relaxing residual edge e would still change a relevant label.
bool CanRelax(const LabelTable& labels, const ResidualView& residual,
              ResidualEdgeIndex e);

}  // namespace wcp
