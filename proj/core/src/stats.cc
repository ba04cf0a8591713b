#include "wcp/stats.h"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <sstream>

#include "wcp/errors.h"

namespace wcp {

double BinomialUpperTail(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InputError("binomial size must be non-negative");
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  // P(X >= k) equals the regularized incomplete beta I_{1/2}(k, n - k + 1).
  return boost::math::ibeta(static_cast<double>(k),
                            static_cast<double>(n - k + 1), 0.5);
}

SignTestResult SignTest(const std::vector<double>& costs_i,
                        const std::vector<double>& costs_j,
                        std::int64_t correction_factor) {
  if (costs_i.size() != costs_j.size()) {
    throw InputError("sign test needs paired samples of equal length");
  }
  if (correction_factor < 1) {
    throw InputError("correction factor must be positive");
  }
  SignTestResult result;
  for (std::size_t m = 0; m < costs_i.size(); ++m) {
    if (costs_i[m] < costs_j[m]) {
      ++result.n_less;
    } else if (costs_i[m] > costs_j[m]) {
      ++result.n_greater;
    } else {
      ++result.n_equal;
    }
  }
  const std::int64_t n = result.n_less + result.n_greater;
  result.all_equal = n == 0;
  result.p_value = BinomialUpperTail(n, result.n_less);
  result.corrected_p =
      std::min(1.0, result.p_value * static_cast<double>(correction_factor));
  result.significant_1e2 = result.corrected_p < 1e-2;
  result.significant_1e4 = result.corrected_p < 1e-4;
  return result;
}

RatioTable QuantileRatioTable(const std::vector<double>& costs_a,
                              const std::vector<double>& costs_b) {
  if (costs_a.size() != costs_b.size()) {
    throw InputError("ratio table needs paired samples of equal length");
  }
  RatioTable table;
  std::vector<double> ratios;
  for (std::size_t m = 0; m < costs_a.size(); ++m) {
    if (costs_b[m] == 0.0) {
      table.excluded.push_back(m);
      continue;
    }
    ratios.push_back(costs_a[m] / costs_b[m]);
  }
  std::sort(ratios.begin(), ratios.end());
  const double count = static_cast<double>(ratios.size());
  for (std::size_t r = 0; r < ratios.size(); ++r) {
    table.points.push_back({ratios[r], static_cast<double>(r + 1) / count});
  }
  return table;
}

std::string RatioCsv(const RatioTable& table) {
  std::ostringstream out;
  out.precision(17);
  out << "quantile,ratio\n";
  for (const RatioPoint& p : table.points) {
    out << p.quantile << ',' << p.ratio << '\n';
  }
  return out.str();
}

}  // namespace wcp
