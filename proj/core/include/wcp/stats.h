#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wcp {

// P(X >= k) for X ~ Binomial(n, 1/2).
double BinomialUpperTail(std::int64_t n, std::int64_t k);

struct SignTestResult {
  std::int64_t n_less = 0;     // pairs where the first sample is smaller
  std::int64_t n_greater = 0;
  std::int64_t n_equal = 0;
  double p_value = 1.0;
  double corrected_p = 1.0;
  bool all_equal = false;  // no strict pair, p set to 1 by convention
  bool significant_1e2 = false;  // corrected_p < 1e-2
  bool significant_1e4 = false;  // corrected_p < 1e-4
};

// One-sided test that the first sample tends to be smaller (lower cost is
// better). Throws InputError when the lengths differ or the correction
// factor is not positive.
SignTestResult SignTest(const std::vector<double>& costs_i,
                        const std::vector<double>& costs_j,
                        std::int64_t correction_factor = 1);

struct RatioPoint {
  double ratio = 0.0;
  double quantile = 0.0;  // (rank + 1) / count
};

struct RatioTable {
  std::vector<RatioPoint> points;        // ascending ratio
  std::vector<std::size_t> excluded;     // positions with a zero denominator
};

RatioTable QuantileRatioTable(const std::vector<double>& costs_a,
                              const std::vector<double>& costs_b);

// "quantile,ratio".
std::string RatioCsv(const RatioTable& table);

}  // namespace wcp
