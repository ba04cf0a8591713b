#include "wcp/cost.h"

#include <cmath>
#include <ostream>

namespace wcp {

std::int64_t ToFixed(double value) {
  return std::llround(value * static_cast<double>(kFixedScale));
}

double FromFixed(std::int64_t fixed) {
  return static_cast<double>(fixed) / static_cast<double>(kFixedScale);
}

namespace {
constexpr Cost::Rep kCostScale =
    static_cast<Cost::Rep>(kFixedScale) * kFixedScale;
}

double Cost::ToDouble() const {
  if (infinite_) return HUGE_VAL;
  const Rep whole = raw_ / kCostScale;
  const Rep frac = raw_ % kCostScale;
  return static_cast<double>(whole) +
         static_cast<double>(frac) / static_cast<double>(kCostScale);
}

std::string Cost::ToString() const {
  if (infinite_) return "inf";
  Rep v = raw_;
  const bool negative = v < 0;
  if (negative) v = -v;
  Rep whole = v / kCostScale;
  Rep frac = v % kCostScale;
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + whole % 10));
    whole /= 10;
  } while (whole != 0);
  std::string out = negative ? "-" + digits : digits;
  if (frac != 0) {
    std::string f(12, '0');
    for (int i = 11; i >= 0; --i) {
      f[i] = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    while (f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

std::optional<Cost> Cost::Parse(std::string_view text) {
  if (text == "inf") return Infinite();
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if (whole.empty() || frac.size() > 12 ||
      (dot != std::string_view::npos && frac.empty())) {
    return std::nullopt;
  }
  Rep value = 0;
  for (char ch : whole) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + (ch - '0');
  }
  Rep fraction = 0;
  for (std::size_t i = 0; i < 12; ++i) {
    const char ch = i < frac.size() ? frac[i] : '0';
    if (ch < '0' || ch > '9') return std::nullopt;
    fraction = fraction * 10 + (ch - '0');
  }
  const Rep raw = value * kCostScale + fraction;
  return FromRaw(negative ? -raw : raw);
}

std::ostream& operator<<(std::ostream& out, const Cost& cost) {
  return out << cost.ToString();
}

}  // namespace wcp
