#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace wcp {

// Input decimals (lengths, cost per length) are stored as integer multiples of
// 1e-6. A Cost is therefore an integer multiple of 1e-12 and all arithmetic
// on it is exact.
inline constexpr std::int64_t kFixedScale = 1'000'000;

// Rounds a decimal input to the nearest multiple of 1e-6.
std::int64_t ToFixed(double value);
double FromFixed(std::int64_t fixed);

// Exact cost in units of 1e-12 currency, with a saturating +infinity.
class Cost {
 public:
  using Rep = __int128;

  constexpr Cost() = default;

  static constexpr Cost Zero() { return Cost(); }
  static constexpr Cost Infinite() {
    Cost c;
    c.infinite_ = true;
    return c;
  }
  static constexpr Cost FromRaw(Rep raw) {
    Cost c;
    c.raw_ = raw;
    return c;
  }
  // cost_per_length and length both in fixed (1e-6) units.
  static constexpr Cost Product(std::int64_t cost_per_length,
                                std::int64_t length) {
    return FromRaw(static_cast<Rep>(cost_per_length) * length);
  }

  constexpr bool IsInfinite() const { return infinite_; }
  constexpr bool IsFinite() const { return !infinite_; }
  constexpr bool IsNegative() const { return !infinite_ && raw_ < 0; }
  constexpr Rep raw() const { return raw_; }

  // Parses the output of ToString(); nullopt on malformed input.
  static std::optional<Cost> Parse(std::string_view text);

  double ToDouble() const;
  // Exact decimal rendering, "inf" for infinity.
  std::string ToString() const;

  constexpr Cost operator-() const {
    // Negating infinity has no meaning in this model.
    return infinite_ ? *this : FromRaw(-raw_);
  }

  constexpr Cost& operator+=(Cost other) {
    if (infinite_ || other.infinite_) {
      infinite_ = true;
      raw_ = 0;
    } else {
      raw_ += other.raw_;
    }
    return *this;
  }
  // Subtracting infinity is undefined; callers only subtract finite values.
  constexpr Cost& operator-=(Cost other) { return *this += -other; }

  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }
  friend constexpr Cost operator-(Cost a, Cost b) { return a -= b; }

  friend constexpr bool operator==(Cost a, Cost b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.raw_ == b.raw_);
  }
  friend constexpr std::strong_ordering operator<=>(Cost a, Cost b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    if (a.raw_ < b.raw_) return std::strong_ordering::less;
    if (a.raw_ > b.raw_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rep raw_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& out, const Cost& cost);

}  // namespace wcp
