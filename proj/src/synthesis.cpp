#include "qwmc/synthesis.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwmc {

std::vector<int> RegisterLayout::register_qubits() const {
  std::vector<int> q(static_cast<std::size_t>(register_width()));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

std::vector<int> RegisterLayout::ancilla_qubits() const {
  std::vector<int> q;
  for (int c = 0; c < clauses; ++c) q.push_back(clause_qubit(c));
  if (has_result) q.push_back(result_qubit());
  return q;
}

RegisterLayout layout_for(const WeightedCnf& cnf, bool with_result) {
  return RegisterLayout{cnf.variable_count(), cnf.clause_count(), with_result};
}

namespace {

bool is_tautology(const Clause& clause) {
  for (const Literal& a : clause) {
    for (const Literal& b : clause) {
      if (a.variable == b.variable && a.negated != b.negated) return true;
    }
  }
  return false;
}

// Leaves clause ancilla c holding the truth value of clause c.
Circuit clause_compute(const WeightedCnf& cnf, const RegisterLayout& layout) {
  Circuit circuit(layout.qubit_count());
  for (int c = 0; c < cnf.clause_count(); ++c) {
    const Clause& clause = cnf.clauses()[static_cast<std::size_t>(c)];
    const int ancilla = layout.clause_qubit(c);
    circuit.add(Gate::x(ancilla));
    if (is_tautology(clause)) continue;
    // The clause is violated when every positive literal is 0 and every
    // negated literal is 1; flip positive wires so the pattern is all-ones.
    std::vector<int> controls;
    for (const Literal& lit : clause) {
      const int q = layout.variable_qubit(lit.variable);
      controls.push_back(q);
      if (!lit.negated) circuit.add(Gate::x(q));
    }
    circuit.add(Gate::x(ancilla, controls));
    for (const Literal& lit : clause) {
      if (!lit.negated) circuit.add(Gate::x(layout.variable_qubit(lit.variable)));
    }
  }
  return circuit;
}

std::vector<int> clause_ancillas(const RegisterLayout& layout) {
  std::vector<int> q;
  for (int c = 0; c < layout.clauses; ++c) q.push_back(layout.clause_qubit(c));
  return q;
}

// ZXZX = -I on any qubit.
void append_minus_identity(Circuit& circuit, int qubit) {
  circuit.add(Gate::z(qubit)).add(Gate::x(qubit)).add(Gate::z(qubit)).add(Gate::x(qubit));
}

}  // namespace

CompiledCircuit build_formula_circuit(const WeightedCnf& cnf) {
  const RegisterLayout layout = layout_for(cnf, true);
  Circuit circuit(layout.qubit_count());
  if (cnf.has_empty_clause()) return {circuit, layout};  // constant 0
  circuit.append(clause_compute(cnf, layout));
  circuit.add(Gate::x(layout.result_qubit(), clause_ancillas(layout)));
  return {circuit, layout};
}

CompiledCircuit build_phase_oracle(const WeightedCnf& cnf, bool augmented) {
  const RegisterLayout layout = layout_for(cnf);
  Circuit circuit(layout.qubit_count());
  if (cnf.has_empty_clause()) return {circuit, layout};  // no models: identity

  const Circuit compute = clause_compute(cnf, layout);
  circuit.append(compute);
  std::vector<int> ancillas = clause_ancillas(layout);
  if (augmented) {
    circuit.add(Gate::z(layout.augment_qubit(), ancillas));
  } else if (!ancillas.empty()) {
    const int target = ancillas.back();
    ancillas.pop_back();
    circuit.add(Gate::z(target, ancillas));
  } else {
    append_minus_identity(circuit, 0);  // phi is a tautology
  }
  circuit.append(compute.adjoint());
  return {circuit, layout};
}

StatePrepSpec thetas_from_weights(const WeightedCnf& cnf) {
  StatePrepSpec spec;
  spec.thetas.reserve(static_cast<std::size_t>(cnf.variable_count()));
  for (int v = 1; v <= cnf.variable_count(); ++v) {
    const auto& w = cnf.weight(v);
    if (std::abs(w.sum() - 1.0) > 1e-9) {
      throw std::invalid_argument("variable " + std::to_string(v) + " weights are not normalized (sum " +
                                  std::to_string(w.sum()) + ")");
    }
    const double p = std::clamp(w.positive, 0.0, 1.0);
    spec.thetas.push_back(2.0 * std::acos(std::sqrt(std::clamp(1.0 - p, 0.0, 1.0))));
  }
  return spec;
}

Circuit build_state_prep(const StatePrepSpec& spec, int qubit_count) {
  const int n = static_cast<int>(spec.thetas.size());
  Circuit circuit(std::max(qubit_count, n + 1));
  for (int i = 0; i < n; ++i) circuit.add(Gate::ry(i, spec.thetas[static_cast<std::size_t>(i)]));
  if (spec.includes_augment) circuit.add(Gate::h(n));
  return circuit;
}

CompiledCircuit build_grover(const WeightedCnf& cnf) {
  auto [oracle, layout] = build_phase_oracle(cnf, true);
  const Circuit prep = build_state_prep(thetas_from_weights(cnf), layout.qubit_count());
  const std::vector<int> reg = layout.register_qubits();
  const int e = layout.augment_qubit();

  Circuit g = oracle;
  g.append(prep.adjoint());
  for (int q : reg) g.add(Gate::x(q));
  std::vector<int> others(reg.begin(), reg.end() - 1);
  g.add(Gate::z(e, others));
  for (int q : reg) g.add(Gate::x(q));
  g.append(prep);
  append_minus_identity(g, e);
  return {g, layout};
}

Circuit controlled(const Circuit& circuit, int control) {
  if (control < 0) throw std::invalid_argument("negative control index");
  Circuit out(std::max(circuit.qubit_count(), control + 1));
  for (const Gate& g : circuit.gates()) {
    if (g.target == control || std::find(g.controls.begin(), g.controls.end(), control) != g.controls.end()) {
      throw std::invalid_argument("control qubit " + std::to_string(control) + " is already used by the circuit");
    }
    Gate c = g;
    c.controls.push_back(control);
    out.add(std::move(c));
  }
  return out;
}

GroverSubspace grover_subspace(const WeightedCnf& normalized_cnf) {
  const RegisterLayout layout = layout_for(normalized_cnf);
  const int n = normalized_cnf.variable_count();
  StateVector alpha(layout.qubit_count());
  StateVector beta(layout.qubit_count());
  alpha.amplitudes().setZero();
  beta.amplitudes().setZero();
  double good = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const Assignment a(n, x);
    const double amp = std::sqrt(0.5 * assignment_weight(normalized_cnf, a));
    const bool model = evaluate(normalized_cnf, a);
    alpha.amplitudes()(static_cast<Eigen::Index>(x)) = amp;  // e = 0
    const auto with_e = static_cast<Eigen::Index>(x | (std::uint64_t{1} << n));
    if (model) {
      beta.amplitudes()(with_e) = amp;
      good += amp * amp;
    } else {
      alpha.amplitudes()(with_e) = amp;
    }
  }
  if (alpha.norm() > 0) alpha.amplitudes() /= alpha.norm();
  if (beta.norm() > 0) beta.amplitudes() /= beta.norm();
  return {std::move(alpha), std::move(beta), good};
}

GroverAngle grover_angle(const WeightedCnf& cnf) {
  if (cnf.variable_count() > 12) {
    throw GuardError("grover_angle supports at most 12 variables, got " + std::to_string(cnf.variable_count()));
  }
  const WeightedCnf normalized = normalize_weights(cnf).cnf;
  const double wmc_hat = exact_wmc(normalized);
  GroverAngle result;
  result.theta = 2.0 * std::asin(std::sqrt(std::clamp(wmc_hat / 2.0, 0.0, 1.0)));

  const GroverSubspace span = grover_subspace(normalized);
  if (span.sin_half_theta_squared < 1e-14 || span.beta.norm() == 0.0) {
    result.degenerate = true;
    return result;
  }

  const Circuit g = build_grover(normalized).circuit;
  StateVector g_alpha = span.alpha;
  StateVector g_beta = span.beta;
  apply_circuit(g_alpha, g);
  apply_circuit(g_beta, g);
  Eigen::Matrix2cd restricted;
  restricted << span.alpha.amplitudes().dot(g_alpha.amplitudes()), span.alpha.amplitudes().dot(g_beta.amplitudes()),
      span.beta.amplitudes().dot(g_alpha.amplitudes()), span.beta.amplitudes().dot(g_beta.amplitudes());
  const Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(restricted, false);
  const auto& eig = solver.eigenvalues();
  const double numeric = 0.5 * (std::abs(std::arg(eig(0))) + std::abs(std::arg(eig(1))));
  result.numeric = numeric;
  if (std::abs(numeric - result.theta) > 1e-8) {
    throw std::logic_error("Grover rotation angle mismatch: analytic " + std::to_string(result.theta) +
                           ", numeric " + std::to_string(numeric));
  }
  return result;
}

}  // namespace qwmc
