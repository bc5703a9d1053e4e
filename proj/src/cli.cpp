#include "qwmc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "qwmc/classical.hpp"
#include "qwmc/driver.hpp"
#include "qwmc/report.hpp"
#include "qwmc/synthesis.hpp"

namespace qwmc {

namespace {

// Quantum and Monte Carlo runs carry the brute-force value up to this size.
constexpr int kSelfCheckLimit = 12;

struct RunSpec {
  std::string input_path;
  std::string mode = "exact";
  std::optional<int> t_override;
  double epsilon = 1.0 / 12.0;
  std::optional<int> shots;
  std::int64_t samples_k = 10000;
  double confidence = 0.75;
  std::uint64_t seed = 0;
  std::string output_format = "text";
  std::optional<std::string> dump_circuit;
};

PrecisionParams precision_for(const RunSpec& spec, int n) {
  if (!spec.t_override) {
    return PrecisionParams::from_accuracy(default_precision(n).m, spec.epsilon);
  }
  const int slack = required_t(1, spec.epsilon) - 1;
  const int m = std::max(1, *spec.t_override - slack);
  return PrecisionParams::with_width(m, spec.epsilon, std::max(*spec.t_override, m));
}

void write_dump(const std::string& path, const Circuit& circuit) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit dump to '" + path + "'");
  out << dump_circuit(circuit);
}

Document run(const RunSpec& spec) {
  const WeightedCnf cnf = load_weighted_dimacs(spec.input_path);
  const int n = cnf.variable_count();

  Document doc;
  doc["mode"] = spec.mode;
  doc["input"] = spec.input_path;
  doc["variables"] = n;
  doc["clauses"] = cnf.clause_count();

  if (spec.mode == "exact") {
    if (spec.dump_circuit) write_dump(*spec.dump_circuit, build_formula_circuit(cnf).circuit);
    doc["wmc"] = exact_wmc(cnf);
    doc["model_count"] = exact_model_count(cnf);
    return doc;
  }

  if (spec.mode == "mc") {
    if (spec.dump_circuit) write_dump(*spec.dump_circuit, build_formula_circuit(cnf).circuit);
    std::mt19937_64 rng(spec.seed);
    merge_into(doc, to_document(mc_estimate(cnf, spec.samples_k, spec.confidence, rng)));
    doc["seed"] = spec.seed;
    if (n <= kSelfCheckLimit) doc["exact_wmc"] = exact_wmc(cnf);
    return doc;
  }

  QwmcConfig config;
  config.precision = precision_for(spec, n);
  config.seed = spec.seed;
  if (spec.shots) {
    config.mode = EstimateMode::sample;
    config.shots = *spec.shots;
  }
  const bool full = spec.output_format == "structured";

  if (spec.mode == "qwmc") {
    if (spec.dump_circuit) write_dump(*spec.dump_circuit, build_grover(normalize_weights(cnf).cnf).circuit);
    merge_into(doc, to_document(run_qwmc(cnf, config), full));
  } else {
    if (spec.dump_circuit) write_dump(*spec.dump_circuit, build_grover(cnf.with_uniform_weights(0.5)).circuit);
    merge_into(doc, to_document(run_quantum_count(cnf, config), full));
  }
  if (n > kSelfCheckLimit) doc.erase("exact_wmc");
  doc["seed"] = spec.seed;
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunSpec spec;
  CLI::App app{"Weighted model counting: exact, Monte Carlo, and simulated quantum estimators", "qwmc"};
  app.add_option("input", spec.input_path, "Weighted DIMACS file")->required();
  app.add_option("--mode", spec.mode, "exact | mc | qwmc | qcount")
      ->check(CLI::IsMember({"exact", "mc", "qwmc", "qcount"}));
  app.add_option("--t", spec.t_override, "Phase register width (overrides the default precision)")
      ->check(CLI::Range(1, 24));
  app.add_option("--epsilon", spec.epsilon, "Phase estimation failure probability")
      ->check(CLI::Range(0.0, 1.0).description("in (0, 1)"));
  app.add_option("--shots", spec.shots, "Sample this many measurements instead of reading the exact distribution")
      ->check(CLI::PositiveNumber);
  app.add_option("--k", spec.samples_k, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  app.add_option("--confidence", spec.confidence, "Monte Carlo interval confidence");
  app.add_option("--seed", spec.seed, "Random seed");
  app.add_option("--format", spec.output_format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--dump-circuit", spec.dump_circuit, "Write the compiled circuit to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0)) throw CLI::ValidationError("--epsilon", "must lie in (0, 1)");
    if (!(spec.confidence > 0.0 && spec.confidence < 1.0)) {
      throw CLI::ValidationError("--confidence", "must lie in (0, 1)");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qwmc: " << e.what() << '\n';
    return 2;
  }

  try {
    const Document doc = run(spec);
    out << (spec.output_format == "structured" ? doc.dump(2) + "\n" : to_text(doc));
    return 0;
  } catch (const ParseError& e) {
    err << "qwmc: " << spec.input_path << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "qwmc: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace qwmc
