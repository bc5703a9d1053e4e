#pragma once

#include <cstdint>
#include <random>

#include "qwmc/cnf.hpp"

namespace qwmc {

/// Standard-normal quantile for a 75% two-sided interval.
inline constexpr double kZ75 = 0.6744898;

/// Monte Carlo WMC estimate with a normal-approximation interval.
struct McResult {
  double estimate = 0.0;  // p_hat * scale
  std::int64_t k = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = 0.75;
  double z = kZ75;
  double p_hat = 0.0;     // fraction of sampled assignments that are models
  double scale = 1.0;     // product of V_i

  friend bool operator==(const McResult&, const McResult&) = default;
};

/// z with P(|Z| <= z) = confidence.
double two_sided_quantile(double confidence);

/// Draws k assignments bit by bit from the normalized weights, counts models,
/// and scales the hit fraction by prod V_i. The interval is
/// p_hat +- z sqrt(p_hat (1 - p_hat) / k), scaled and clamped to [0, scale].
McResult mc_estimate(const WeightedCnf& cnf, std::int64_t k, double confidence, std::mt19937_64& rng);

/// Same, with z given directly.
McResult mc_estimate_with_z(const WeightedCnf& cnf, std::int64_t k, double confidence, double z,
                            std::mt19937_64& rng);

/// ceil(4 z^2 N (1 - M/N)): samples for a sqrt(M)-wide count interval.
std::int64_t required_samples_count(double space_size, double model_count, double z = kZ75);

/// ceil(z^2 2^n): worst case over the normalized WMC.
std::int64_t required_samples_wmc(int n, double z = kZ75);

}  // namespace qwmc
