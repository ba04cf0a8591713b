#include "wcp/delta_strategy.h"

#include <algorithm>
#include <cctype>

#include "wcp/errors.h"

namespace wcp {

std::string_view DeltaName(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::kInc:
      return "inc";
    case DeltaKind::kDec:
      return "dec";
    case DeltaKind::kIncDec:
      return "inc-dec";
    case DeltaKind::kRandom:
      return "random";
    case DeltaKind::kStayInc:
      return "stay-inc";
    case DeltaKind::kStayDec:
      return "stay-dec";
    case DeltaKind::kStayIncDec:
      return "stay-inc-dec";
    case DeltaKind::kStayRandom:
      return "stay-random";
  }
  return "?";
}

std::optional<DeltaKind> ParseDeltaKind(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '-' || ch == '_') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (key.starts_with("stay")) {
    key = "s" + key.substr(4);
  }
  static constexpr std::pair<std::string_view, DeltaKind> kNames[] = {
      {"inc", DeltaKind::kInc},         {"dec", DeltaKind::kDec},
      {"incdec", DeltaKind::kIncDec},   {"random", DeltaKind::kRandom},
      {"sinc", DeltaKind::kStayInc},    {"sdec", DeltaKind::kStayDec},
      {"sincdec", DeltaKind::kStayIncDec},
      {"srandom", DeltaKind::kStayRandom},
  };
  for (const auto& [n, kind] : kNames) {
    if (key == n) return kind;
  }
  return std::nullopt;
}

DeltaStrategy::DeltaStrategy(DeltaKind kind, std::int64_t max_capacity,
                             std::uint64_t seed)
    : kind_(kind),
      max_delta_(2 * max_capacity),
      seed_(seed),
      rng_(seed),
      tried_(static_cast<std::size_t>(std::max<std::int64_t>(0, 2 * max_capacity)) + 1, 0) {
  if (max_capacity < 1) throw InputError("max cable capacity must be positive");
}

bool DeltaStrategy::is_stay() const {
  switch (kind_) {
    case DeltaKind::kStayInc:
    case DeltaKind::kStayDec:
    case DeltaKind::kStayIncDec:
    case DeltaKind::kStayRandom:
      return true;
    default:
      return false;
  }
}

DeltaKind DeltaStrategy::base() const {
  switch (kind_) {
    case DeltaKind::kStayInc:
      return DeltaKind::kInc;
    case DeltaKind::kStayDec:
      return DeltaKind::kDec;
    case DeltaKind::kStayIncDec:
      return DeltaKind::kIncDec;
    case DeltaKind::kStayRandom:
      return DeltaKind::kRandom;
    default:
      return kind_;
  }
}

void DeltaStrategy::MarkTried(std::int64_t delta) {
  if (!tried_[delta]) {
    tried_[delta] = 1;
    ++num_tried_;
  }
}

void DeltaStrategy::ResetTried() {
  std::fill(tried_.begin(), tried_.end(), 0);
  num_tried_ = 0;
}

std::optional<std::int64_t> DeltaStrategy::SmallestUntriedFrom(
    std::int64_t from) const {
  for (std::int64_t d = std::max<std::int64_t>(from, 1); d <= max_delta_; ++d) {
    if (!tried_[d]) return d;
  }
  return std::nullopt;
}

std::optional<std::int64_t> DeltaStrategy::LargestUntriedFrom(
    std::int64_t from) const {
  for (std::int64_t d = std::min(from, max_delta_); d >= 1; --d) {
    if (!tried_[d]) return d;
  }
  return std::nullopt;
}

std::optional<std::int64_t> DeltaStrategy::AnyUntriedUpward(
    std::int64_t from) const {
  if (auto d = SmallestUntriedFrom(from)) return d;
  return SmallestUntriedFrom(1);
}

std::optional<std::int64_t> DeltaStrategy::AnyUntriedDownward(
    std::int64_t from) const {
  if (auto d = LargestUntriedFrom(from)) return d;
  return LargestUntriedFrom(max_delta_);
}

std::optional<std::int64_t> DeltaStrategy::DrawUntried() {
  std::vector<std::int64_t> open;
  for (std::int64_t d = 1; d <= max_delta_; ++d) {
    if (!tried_[d]) open.push_back(d);
  }
  if (open.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
  return open[pick(rng_)];
}

std::int64_t DeltaStrategy::Initial() {
  ResetTried();
  rng_.seed(seed_);
  counting_down_ = false;
  canceled_at_current_ = false;
  switch (base()) {
    case DeltaKind::kDec:
      current_ = max_delta_;
      break;
    case DeltaKind::kRandom:
      current_ = DrawUntried();
      break;
    default:
      current_ = 1;
      break;
  }
  return *current_;
}

std::optional<std::int64_t> DeltaStrategy::AfterCancel() {
  const std::int64_t d = *current_;
  switch (base()) {
    case DeltaKind::kInc:
      return AnyUntriedUpward(1);
    case DeltaKind::kDec:
      return AnyUntriedDownward(max_delta_);
    case DeltaKind::kIncDec:
      if (auto down = LargestUntriedFrom(d - 1)) {
        counting_down_ = true;
        return down;
      }
      counting_down_ = false;
      return AnyUntriedUpward(1);
    default:
      return DrawUntried();
  }
}

std::optional<std::int64_t> DeltaStrategy::AfterMiss() {
  const std::int64_t d = *current_;
  switch (base()) {
    case DeltaKind::kInc:
      return AnyUntriedUpward(d + 1);
    case DeltaKind::kDec:
      return AnyUntriedDownward(d - 1);
    case DeltaKind::kIncDec:
      if (counting_down_) {
        if (auto down = LargestUntriedFrom(d - 1)) return down;
        counting_down_ = false;
        return AnyUntriedUpward(1);
      }
      return AnyUntriedUpward(d + 1);
    default:
      return DrawUntried();
  }
}

std::optional<std::int64_t> DeltaStrategy::Next(bool found) {
  if (!current_) return std::nullopt;
  if (found) {
    ResetTried();
    if (is_stay()) {
      canceled_at_current_ = true;
      return current_;
    }
    current_ = AfterCancel();
    return current_;
  }
  MarkTried(*current_);
  if (canceled_at_current_) {
    canceled_at_current_ = false;
    current_ = AfterCancel();
  } else {
    current_ = AfterMiss();
  }
  return current_;
}

}  // namespace wcp
