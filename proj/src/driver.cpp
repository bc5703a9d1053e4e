#include "qwmc/driver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qwmc/statevector.hpp"
#include "qwmc/synthesis.hpp"

namespace qwmc {

PrecisionParams default_precision(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return PrecisionParams::from_accuracy((n + 1) / 2 + 2, 1.0 / 12.0);
}

double normalized_estimate(std::uint64_t outcome, int t) {
  const double s = std::sin(std::numbers::pi * static_cast<double>(outcome) / std::ldexp(1.0, t));
  return 2.0 * s * s;
}

double error_bound(int n, double scale) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  return scale * std::pow(2.0, -(n + 1) / 2.0);
}

double count_error_bound(double model_count, double space_size, int m) {
  return (std::sqrt(2.0 * model_count * space_size) + space_size / std::ldexp(1.0, m + 1)) * std::ldexp(1.0, -m);
}

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size() / 2;
  return values.size() % 2 ? values[k] : 0.5 * (values[k - 1] + values[k]);
}

}  // namespace

QwmcResult run_qwmc(const WeightedCnf& cnf, const QwmcConfig& config) {
  if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");
  const int n = cnf.variable_count();

  QwmcResult r;
  r.precision = config.precision.value_or(default_precision(n));
  const int t = r.precision.t;

  const NormalizedCnf normalized = normalize_weights(cnf);
  r.scale = normalized.scale;
  const CompiledCircuit grover = build_grover(normalized.cnf);
  const Circuit prep = build_state_prep(thetas_from_weights(normalized.cnf), grover.layout.qubit_count());

  r.outcome_distribution = phase_estimate(grover.circuit, prep, r.precision, config.power);
  r.oracle_calls = oracle_call_count(t);
  r.exact_wmc = exact_wmc(cnf);
  r.error_bound = error_bound(n, r.scale);

  const auto& dist = r.outcome_distribution;
  for (Eigen::Index y = 0; y < dist.size(); ++y) {
    const double estimate = normalized_estimate(static_cast<std::uint64_t>(y), t) * r.scale;
    if (std::abs(estimate - r.exact_wmc) <= r.error_bound) r.success_mass += dist(y);
  }
  Eigen::Index top = 0;
  dist.maxCoeff(&top);
  r.top_outcome = static_cast<std::uint64_t>(top);

  if (config.mode == EstimateMode::distribution) {
    r.theta_hat = 2.0 * std::numbers::pi * static_cast<double>(r.top_outcome) / std::ldexp(1.0, t);
    r.wmc_hat_normalized = normalized_estimate(r.top_outcome, t);
  } else {
    std::mt19937_64 rng(config.seed);
    std::vector<double> normalized_estimates;
    for (int s = 0; s < config.shots; ++s) {
      const std::uint64_t y = sample_index(dist, rng);
      r.shot_outcomes.push_back(y);
      normalized_estimates.push_back(normalized_estimate(y, t));
      r.shot_estimates.push_back(normalized_estimates.back() * r.scale);
    }
    r.wmc_hat_normalized = median(normalized_estimates);
    r.theta_hat = 2.0 * std::asin(std::sqrt(std::clamp(r.wmc_hat_normalized / 2.0, 0.0, 1.0)));
  }
  r.wmc = r.wmc_hat_normalized * r.scale;
  return r;
}

CountResult run_quantum_count(const WeightedCnf& cnf, const QwmcConfig& config) {
  const WeightedCnf uniform = cnf.with_uniform_weights(0.5);
  CountResult c;
  c.qwmc = run_qwmc(uniform, config);
  const int n = cnf.variable_count();
  const double space = std::ldexp(1.0, n);
  c.model_count_hat = space * c.qwmc.wmc_hat_normalized;
  c.count_error_bound = count_error_bound(c.model_count_hat, space, c.qwmc.precision.m);
  c.exact_count = exact_model_count(cnf);
  const double m_exact = static_cast<double>(c.exact_count);
  c.headline_bound = std::sqrt(m_exact / 8.0) + 1.0 / 32.0;
  const auto& dist = c.qwmc.outcome_distribution;
  for (Eigen::Index y = 0; y < dist.size(); ++y) {
    const double m_hat = space * normalized_estimate(static_cast<std::uint64_t>(y), c.qwmc.precision.t);
    if (std::abs(m_hat - m_exact) <= c.headline_bound) c.success_mass += dist(y);
  }
  return c;
}

}  // namespace qwmc
