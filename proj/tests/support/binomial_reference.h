#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace wcp::testing {

// Exact upper tails P(X >= k), k = 0..n+1, of Binomial(n, 1/2), as binomial
// coefficient sums over 2^n rounded to 100 significant bits.
inline std::vector<double> ExactUpperTails(std::int64_t n) {
  using boost::multiprecision::cpp_bin_float_100;
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> choose(static_cast<std::size_t>(n + 1));
  choose[0] = 1;
  for (std::int64_t j = 1; j <= n; ++j) {
    choose[j] = choose[j - 1] * (n - j + 1) / j;
  }
  const cpp_bin_float_100 total = ldexp(cpp_bin_float_100(1), static_cast<int>(n));
  std::vector<double> tails(static_cast<std::size_t>(n + 2), 0.0);
  cpp_int suffix = 0;
  for (std::int64_t k = n; k >= 0; --k) {
    suffix += choose[k];
    tails[k] = static_cast<double>(cpp_bin_float_100(suffix) / total);
  }
  return tails;
}

}  // namespace wcp::testing
