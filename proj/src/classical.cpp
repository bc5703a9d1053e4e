#include "qwmc/classical.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <stdexcept>

namespace qwmc {

double two_sided_quantile(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + 0.5 * confidence);
}

McResult mc_estimate_with_z(const WeightedCnf& cnf, std::int64_t k, double confidence, double z,
                            std::mt19937_64& rng) {
  if (k < 1) throw std::invalid_argument("sample count k must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
  if (!(z >= 0.0)) throw std::invalid_argument("z must be non-negative");

  const NormalizedCnf normalized = normalize_weights(cnf);
  const int n = cnf.variable_count();
  std::vector<double> p_true(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) p_true[static_cast<std::size_t>(v - 1)] = normalized.cnf.weight(v).positive;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<bool> bits(static_cast<std::size_t>(n));
  std::int64_t hits = 0;
  for (std::int64_t s = 0; s < k; ++s) {
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = unit(rng) < p_true[i];
    if (evaluate(cnf, Assignment(bits))) ++hits;
  }

  McResult r;
  r.k = k;
  r.confidence = confidence;
  r.z = z;
  r.scale = normalized.scale;
  r.p_hat = static_cast<double>(hits) / static_cast<double>(k);
  r.estimate = r.p_hat * r.scale;
  const double half = z * std::sqrt(r.p_hat * (1.0 - r.p_hat) / static_cast<double>(k));
  r.ci_low = std::clamp((r.p_hat - half) * r.scale, 0.0, r.scale);
  r.ci_high = std::clamp((r.p_hat + half) * r.scale, 0.0, r.scale);
  return r;
}

McResult mc_estimate(const WeightedCnf& cnf, std::int64_t k, double confidence, std::mt19937_64& rng) {
  return mc_estimate_with_z(cnf, k, confidence, two_sided_quantile(confidence), rng);
}

std::int64_t required_samples_count(double space_size, double model_count, double z) {
  if (!(model_count >= 0.0 && model_count <= space_size)) throw std::invalid_argument("need 0 <= M <= N");
  return static_cast<std::int64_t>(std::ceil(4.0 * z * z * space_size * (1.0 - model_count / space_size)));
}

std::int64_t required_samples_wmc(int n, double z) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return static_cast<std::int64_t>(std::ceil(z * z * std::ldexp(1.0, n)));
}

}  // namespace qwmc
