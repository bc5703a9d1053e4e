#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qwmc/classical.hpp"
#include "test_support.hpp"

namespace qwmc {
namespace {

TEST(TwoSidedQuantile, KnownValues) {
  EXPECT_NEAR(two_sided_quantile(0.5), kZ75, 1e-7);  // the 75th percentile
  EXPECT_NEAR(two_sided_quantile(0.95), 1.959963985, 1e-8);
  EXPECT_NEAR(two_sided_quantile(0.75), 1.150349380, 1e-8);
  EXPECT_THROW(two_sided_quantile(1.0), std::invalid_argument);
}

TEST(McEstimate, TautologyIsExact) {
  std::mt19937_64 rng(1);
  const WeightedCnf cnf(3, {}, {{0.2, 0.3}, {1.0, 1.0}, {4.0, 0.0}});
  for (std::int64_t k : {1, 10, 1000}) {
    const McResult r = mc_estimate(cnf, k, 0.75, rng);
    EXPECT_DOUBLE_EQ(r.estimate, 0.5 * 2.0 * 4.0);
    EXPECT_DOUBLE_EQ(r.ci_low, r.ci_high);
  }
}

TEST(McEstimate, SprinklerLargeSample) {
  std::mt19937_64 rng(2024);
  const McResult r = mc_estimate(sprinkler_cnf(), 100000, 0.75, rng);
  EXPECT_NEAR(r.estimate, 0.75, 0.01);
  EXPECT_LE(r.ci_low, r.estimate);
  EXPECT_GE(r.ci_high, r.estimate);
  EXPECT_EQ(r.k, 100000);
}

TEST(McEstimate, UnsatisfiableIsZero) {
  std::mt19937_64 rng(3);
  const McResult r = mc_estimate(WeightedCnf(1, {{{1, false}}, {{1, true}}}), 500, 0.75, rng);
  EXPECT_EQ(r.estimate, 0.0);
  EXPECT_EQ(r.ci_low, 0.0);
  EXPECT_EQ(r.ci_high, 0.0);
}

TEST(McEstimate, ScalesByWeightProduct) {
  std::mt19937_64 rng(4);
  const WeightedCnf cnf = sprinkler_cnf().with_weights({{0.6, 1.4}, {0.2, 0.8}, {2.0, 2.0}});
  const McResult r = mc_estimate(cnf, 200000, 0.75, rng);
  EXPECT_NEAR(r.scale, 8.0, 1e-12);
  EXPECT_NEAR(r.estimate, exact_wmc(cnf), 0.08);
  EXPECT_LE(r.ci_high, r.scale);
}

TEST(McEstimate, ContractViolations) {
  std::mt19937_64 rng(5);
  EXPECT_THROW(mc_estimate(sprinkler_cnf(), 0, 0.75, rng), std::invalid_argument);
  EXPECT_THROW(mc_estimate(sprinkler_cnf(), 10, 1.5, rng), std::invalid_argument);
  EXPECT_THROW(mc_estimate(WeightedCnf(1, {}, {{0, 0}}), 10, 0.75, rng), std::domain_error);
}

TEST(McEstimate, SameSeedSameResult) {
  std::mt19937_64 a(77), b(77);
  EXPECT_EQ(mc_estimate(sprinkler_cnf(), 1000, 0.75, a), mc_estimate(sprinkler_cnf(), 1000, 0.75, b));
}

TEST(McEstimate, Unbiased) {
  double sum = 0.0;
  const int runs = 1000;
  for (int i = 0; i < runs; ++i) {
    std::mt19937_64 rng(1000 + i);
    sum += mc_estimate(sprinkler_cnf(), 100, 0.75, rng).estimate;
  }
  const double sigma = std::sqrt(0.375 * 0.625 / 100);
  EXPECT_LT(std::abs(sum / runs - 0.75), 3 * sigma / std::sqrt(double(runs)));
}

double coverage(double confidence, std::optional<double> z, int runs) {
  int covered = 0;
  for (int i = 0; i < runs; ++i) {
    std::mt19937_64 rng(5000 + i);
    const McResult r = z ? mc_estimate_with_z(sprinkler_cnf(), 500, confidence, *z, rng)
                         : mc_estimate(sprinkler_cnf(), 500, confidence, rng);
    covered += r.ci_low <= 0.75 && 0.75 <= r.ci_high;
  }
  return covered / double(runs);
}

TEST(McEstimate, IntervalCoverage) {
  const double c = coverage(0.75, std::nullopt, 400);
  EXPECT_GE(c, 0.65);
  EXPECT_LE(c, 0.85);
}

TEST(McEstimate, PercentileZGivesHalfCoverage) {
  // z = 0.6744898 bounds the central 50%, not 75%.
  const double c = coverage(0.75, kZ75, 400);
  EXPECT_NEAR(c, 0.5, 0.1);
}

TEST(McEstimate, SamplesFollowNormalizedWeights) {
  // With phi true everywhere each draw is a model; check marginals by
  // single-variable unit clauses instead.
  const WeightedCnf base = sprinkler_cnf().with_weights({{0.3, 0.7}, {1.6, 0.4}, {0.5, 1.5}});
  const double expected[3] = {0.3, 0.8, 0.25};
  for (int v = 1; v <= 3; ++v) {
    std::mt19937_64 rng(600 + v);
    const WeightedCnf unit(3, {{{v, false}}}, base.weights());
    const McResult r = mc_estimate(unit, 100000, 0.75, rng);
    EXPECT_NEAR(r.p_hat, expected[v - 1], 0.01) << "variable " << v;
  }
}

TEST(RequiredSamples, CountExamples) {
  EXPECT_EQ(required_samples_count(8, 4, kZ75), 8);
  EXPECT_EQ(required_samples_count(8, 8, kZ75), 0);
  EXPECT_EQ(required_samples_count(1024, 0, kZ75), 1864);
  EXPECT_THROW(required_samples_count(8, 9), std::invalid_argument);
}

TEST(RequiredSamples, WmcExamples) {
  EXPECT_EQ(required_samples_wmc(3, kZ75), 4);
  EXPECT_EQ(required_samples_wmc(10, kZ75), 466);
  EXPECT_EQ(required_samples_wmc(5, 0.0), 0);
}

}  // namespace
}  // namespace qwmc
