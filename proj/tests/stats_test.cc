#include "wcp/stats.h"

#include <gtest/gtest.h>

#include <cmath>

#include "support/binomial_reference.h"
#include "wcp/errors.h"

namespace wcp {
namespace {

TEST(BinomialUpperTailTest, HandValues) {
  EXPECT_EQ(BinomialUpperTail(10, 8), 56.0 / 1024.0);
  EXPECT_EQ(BinomialUpperTail(10, 0), 1.0);
  EXPECT_EQ(BinomialUpperTail(10, 11), 0.0);
  EXPECT_EQ(BinomialUpperTail(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(BinomialUpperTail(1, 1), 0.5);
  EXPECT_DOUBLE_EQ(BinomialUpperTail(20, 20), std::ldexp(1.0, -20));
}

TEST(BinomialUpperTailTest, MatchesExactSumsOnSampledSizes) {
  for (std::int64_t n : {1, 2, 3, 7, 10, 31, 64, 100, 257, 500, 999, 1000}) {
    const auto exact = testing::ExactUpperTails(n);
    for (std::int64_t k = 0; k <= n; ++k) {
      const double got = BinomialUpperTail(n, k);
      ASSERT_LE(std::abs(got - exact[k]), 1e-12 * exact[k]) << n << " " << k;
    }
  }
}

TEST(SignTestTest, EightWinsTwoLosses) {
  std::vector<double> a;
  std::vector<double> b;
  for (int m = 0; m < 8; ++m) a.push_back(1), b.push_back(2);
  for (int m = 0; m < 2; ++m) a.push_back(3), b.push_back(2);
  for (int m = 0; m < 5; ++m) a.push_back(4), b.push_back(4);
  const SignTestResult r = SignTest(a, b);
  EXPECT_EQ(r.n_less, 8);
  EXPECT_EQ(r.n_greater, 2);
  EXPECT_EQ(r.n_equal, 5);
  EXPECT_EQ(r.p_value, 0.0546875);
  EXPECT_EQ(r.corrected_p, 0.0546875);
  EXPECT_FALSE(r.significant_1e2);
}

TEST(SignTestTest, AlwaysBetterWithCorrection) {
  std::vector<double> a(20, 1.0);
  std::vector<double> b(20, 2.0);
  const SignTestResult r = SignTest(a, b, 112);
  EXPECT_EQ(r.p_value, std::ldexp(1.0, -20));
  EXPECT_DOUBLE_EQ(r.corrected_p, 112.0 * std::ldexp(1.0, -20));
  EXPECT_NEAR(r.corrected_p, 1.068e-4, 1e-7);
  EXPECT_TRUE(r.significant_1e2);
  EXPECT_FALSE(r.significant_1e4);
  // The reverse direction is the lower tail: certain under the null.
  EXPECT_EQ(SignTest(b, a, 112).p_value, 1.0);
}

TEST(SignTestTest, AllEqualGivesOne) {
  const std::vector<double> a = {1, 2, 3};
  const SignTestResult r = SignTest(a, a, 112);
  EXPECT_EQ(r.n_less, 0);
  EXPECT_EQ(r.n_greater, 0);
  EXPECT_EQ(r.n_equal, 3);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_EQ(r.corrected_p, 1.0);
  EXPECT_TRUE(r.all_equal);
}

TEST(SignTestTest, RejectsBadInput) {
  EXPECT_THROW(SignTest({1, 2}, {1}), InputError);
  EXPECT_THROW(SignTest({1}, {1}, 0), InputError);
}

TEST(RatioTableTest, HandDivision) {
  const RatioTable t = QuantileRatioTable({2, 4}, {4, 4});
  ASSERT_EQ(t.points.size(), 2u);
  EXPECT_EQ(t.points[0].ratio, 0.5);
  EXPECT_EQ(t.points[1].ratio, 1.0);
  EXPECT_EQ(t.points[0].quantile, 0.5);
  EXPECT_EQ(t.points[1].quantile, 1.0);
}

TEST(RatioTableTest, IdenticalVectorsAndZeroDenominators) {
  const RatioTable same = QuantileRatioTable({3, 1, 2}, {3, 1, 2});
  for (const RatioPoint& p : same.points) EXPECT_EQ(p.ratio, 1.0);
  const RatioTable zero = QuantileRatioTable({5, 1, 9, 2}, {0, 2, 3, 1});
  EXPECT_EQ(zero.excluded, (std::vector<std::size_t>{0}));
  ASSERT_EQ(zero.points.size(), 3u);
  for (std::size_t i = 1; i < zero.points.size(); ++i) {
    EXPECT_LE(zero.points[i - 1].ratio, zero.points[i].ratio);
  }
  EXPECT_EQ(RatioCsv(zero).rfind("quantile,ratio\n", 0), 0u);
}

}  // namespace
}  // namespace wcp
