#include "qwmc/report.hpp"

#include <cstdio>
#include <sstream>

namespace qwmc {

void merge_into(Document& target, const Document& source) {
  for (const auto& [key, value] : source.items()) target[key] = value;
}

Document to_document(const QwmcResult& r, bool include_distribution) {
  Document d;
  d["t"] = r.precision.t;
  d["m"] = r.precision.m;
  d["epsilon"] = r.precision.epsilon;
  d["theta_hat"] = r.theta_hat;
  d["wmc_hat_normalized"] = r.wmc_hat_normalized;
  d["scale"] = r.scale;
  d["wmc"] = r.wmc;
  d["error_bound"] = r.error_bound;
  d["success_mass"] = r.success_mass;
  d["exact_wmc"] = r.exact_wmc;
  d["top_outcome"] = r.top_outcome;
  d["oracle_call_count"] = r.oracle_calls;
  if (!r.shot_outcomes.empty()) {
    d["shots"] = r.shot_outcomes.size();
    d["shot_outcomes"] = r.shot_outcomes;
    d["shot_estimates"] = r.shot_estimates;
  }
  if (include_distribution) {
    std::vector<double> dist(r.outcome_distribution.data(),
                             r.outcome_distribution.data() + r.outcome_distribution.size());
    d["outcome_distribution"] = dist;
  }
  return d;
}

Document to_document(const CountResult& c, bool include_distribution) {
  Document d;
  d["model_count_hat"] = c.model_count_hat;
  d["count_error_bound"] = c.count_error_bound;
  d["headline_bound"] = c.headline_bound;
  d["exact_count"] = c.exact_count;
  d["count_success_mass"] = c.success_mass;
  merge_into(d, to_document(c.qwmc, include_distribution));
  return d;
}

Document to_document(const McResult& r) {
  Document d;
  d["estimate"] = r.estimate;
  d["k"] = r.k;
  d["ci_low"] = r.ci_low;
  d["ci_high"] = r.ci_high;
  d["confidence"] = r.confidence;
  d["z"] = r.z;
  d["p_hat"] = r.p_hat;
  d["scale"] = r.scale;
  return d;
}

std::string to_text(const Document& doc) {
  std::ostringstream out;
  char buf[32];
  for (const auto& [key, value] : doc.items()) {
    out << key << " = ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_number_float()) {
      std::snprintf(buf, sizeof buf, "%.12g", value.get<double>());
      out << buf;
    } else {
      out << value.dump();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qwmc
