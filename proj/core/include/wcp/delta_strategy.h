#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wcp {

enum class DeltaKind {
  kInc,
  kDec,
  kIncDec,
  kRandom,
  kStayInc,
  kStayDec,
  kStayIncDec,
  kStayRandom,
};

inline constexpr DeltaKind kAllDeltaKinds[] = {
    DeltaKind::kInc,        DeltaKind::kDec,     DeltaKind::kIncDec,
    DeltaKind::kRandom,     DeltaKind::kStayInc, DeltaKind::kStayDec,
    DeltaKind::kStayIncDec, DeltaKind::kStayRandom,
};

// Lower-kebab name, e.g. "stay-inc-dec".
std::string_view DeltaName(DeltaKind kind);
// Accepts the kebab names and the short forms ("s-inc-dec", "incdec").
std::optional<DeltaKind> ParseDeltaKind(std::string_view name);

// Produces the sequence of delta values for one solver run. Values range
// over [1, 2 * max_capacity]. The strategy remembers which values were tried
// since the flow last changed and reports exhaustion once all were.
//
//   Inc      from 1 upwards; back to 1 after a cancellation
//   Dec      from the maximum downwards; back to the maximum after one
//   IncDec   like Inc, but after a cancellation counts down to 1 before
//            counting up again
//   Random   uniform draws, never repeating a value between cancellations
//   Stay*    the same, except that a delta which canceled a cycle is kept
//            until it stops producing cancellations
//
// Counting up or down skips values already tried since the last change of
// the flow; they cannot produce a cancellation.
class DeltaStrategy {
 public:
  DeltaStrategy(DeltaKind kind, std::int64_t max_capacity,
                std::uint64_t seed = 0);

  DeltaKind kind() const { return kind_; }
  std::int64_t max_delta() const { return max_delta_; }
  std::uint64_t seed() const { return seed_; }

  // The first delta.
  std::int64_t Initial();
  // Delta to try after the current one; `found` tells whether the current
  // delta canceled at least one cycle. nullopt once every delta was tried
  // since the last change of the flow.
  std::optional<std::int64_t> Next(bool found);

  std::optional<std::int64_t> current() const { return current_; }
  bool WasTried(std::int64_t delta) const { return tried_[delta] != 0; }
  std::int64_t num_tried() const { return num_tried_; }

 private:
  bool is_stay() const;
  DeltaKind base() const;

  void MarkTried(std::int64_t delta);
  void ResetTried();
  std::optional<std::int64_t> SmallestUntriedFrom(std::int64_t from) const;
  std::optional<std::int64_t> LargestUntriedFrom(std::int64_t from) const;
  std::optional<std::int64_t> DrawUntried();
  std::optional<std::int64_t> AnyUntriedUpward(std::int64_t from) const;
  std::optional<std::int64_t> AnyUntriedDownward(std::int64_t from) const;

  // Base-strategy transitions from the current delta.
  std::optional<std::int64_t> AfterCancel();
  std::optional<std::int64_t> AfterMiss();

  DeltaKind kind_;
  std::int64_t max_delta_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::optional<std::int64_t> current_;
  std::vector<char> tried_;  // index 1..max_delta_
  std::int64_t num_tried_ = 0;
  bool counting_down_ = false;  // IncDec phase
  bool canceled_at_current_ = false;  // Stay* bookkeeping
};

}  // namespace wcp
