#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "qwmc/cnf.hpp"
#include "qwmc/phase_estimation.hpp"

namespace qwmc {

enum class EstimateMode { distribution, sample };

struct QwmcConfig {
  /// Unset means the default m = ceil(n/2) + 2, epsilon = 1/12.
  std::optional<PrecisionParams> precision;
  EstimateMode mode = EstimateMode::distribution;
  int shots = 1;
  std::uint64_t seed = 0;
  PowerMode power = PowerMode::repeated;
};

/// Default precision for n variables: m = ceil(n/2) + 2, epsilon = 1/12,
/// hence t = ceil(n/2) + 5.
PrecisionParams default_precision(int n);

struct QwmcResult {
  PrecisionParams precision;
  double theta_hat = 0.0;            // radians
  double wmc_hat_normalized = 0.0;   // 2 sin^2(theta_hat / 2)
  double scale = 1.0;                // product of V_i
  double wmc = 0.0;                  // wmc_hat_normalized * scale
  double error_bound = 0.0;          // scale * 2^{-(n+1)/2}
  double exact_wmc = 0.0;            // brute-force reference
  double success_mass = 0.0;         // P(|estimate - exact_wmc| <= error_bound)
  std::uint64_t top_outcome = 0;
  std::uint64_t oracle_calls = 0;    // 2^t - 1 Grover applications
  Eigen::VectorXd outcome_distribution;     // length 2^t
  std::vector<std::uint64_t> shot_outcomes; // sample mode only
  std::vector<double> shot_estimates;       // sample mode only, scaled WMC per shot
};

/// WMC estimate carried by phase-register outcome y: 2 sin^2(pi y / 2^t).
/// Invariant under y -> 2^t - y.
double normalized_estimate(std::uint64_t outcome, int t);

double error_bound(int n, double scale);

/// Runs the weighted counting pipeline: normalize, prepare A, build G,
/// phase-estimate, and read the estimate from the top outcome (distribution
/// mode) or from the median of `shots` sampled outcomes (sample mode).
QwmcResult run_qwmc(const WeightedCnf& cnf, const QwmcConfig& config = {});

struct CountResult {
  double model_count_hat = 0.0;      // N * WMC_normalized, N = 2^n
  double count_error_bound = 0.0;    // (sqrt(2 M N) + N / 2^{m+1}) 2^{-m} at M = model_count_hat
  double headline_bound = 0.0;       // sqrt(M/8) + 1/32 at the exact M
  std::uint64_t exact_count = 0;
  double success_mass = 0.0;         // P(|M_hat - M| <= headline_bound)
  QwmcResult qwmc;
};

/// Unweighted counting: every weight set to (0.5, 0.5), same circuit path.
CountResult run_quantum_count(const WeightedCnf& cnf, const QwmcConfig& config = {});

/// (sqrt(2 M N) + N / 2^{m+1}) * 2^{-m}
double count_error_bound(double model_count, double space_size, int m);

}  // namespace qwmc
