#pragma once

#include <optional>
#include <vector>

#include "qwmc/circuit.hpp"
#include "qwmc/cnf.hpp"
#include "qwmc/statevector.hpp"

namespace qwmc {

/// Qubit allocation shared by every compiled circuit of a formula with n
/// variables and m clauses:
///
///     0 .. n-1      variables (variable i+1 on qubit i)
///     n             augmentation qubit e
///     n+1 .. n+m    clause ancillas
///     n+m+1         result qubit (formula evaluator only)
struct RegisterLayout {
  int variables = 0;
  int clauses = 0;
  bool has_result = false;

  int variable_qubit(int variable) const { return variable - 1; }
  int augment_qubit() const { return variables; }
  int clause_qubit(int clause_index) const { return variables + 1 + clause_index; }
  int result_qubit() const { return variables + clauses + 1; }

  /// Variables plus e: the register the Grover operator rotates.
  int register_width() const { return variables + 1; }
  int qubit_count() const { return variables + 1 + clauses + (has_result ? 1 : 0); }

  std::vector<int> register_qubits() const;
  std::vector<int> ancilla_qubits() const;
};

RegisterLayout layout_for(const WeightedCnf& cnf, bool with_result = false);

struct CompiledCircuit {
  Circuit circuit;
  RegisterLayout layout;
};

/// Reversible evaluator: writes phi(x) into the result qubit. Each clause
/// ancilla is raised to |1>, then a multi-controlled X conditioned on the
/// clause's violating pattern clears it; a final multi-controlled X over all
/// clause ancillas sets the result. Clause ancillas are left holding the
/// clause values.
CompiledCircuit build_formula_circuit(const WeightedCnf& cnf);

/// Phase oracle: |x, e> -> (-1)^{phi(x) and e} |x, e> when augmented,
/// (-1)^{phi(x)} |x, e> otherwise. Clause ancillas are computed, used as
/// controls for a Z, and uncomputed, so they return to |0>.
CompiledCircuit build_phase_oracle(const WeightedCnf& cnf, bool augmented = true);

/// Rotation angles for the weighted state preparation.
struct StatePrepSpec {
  std::vector<double> thetas;  // theta_i = 2 acos(sqrt(1 - w_i)), one per variable
  bool includes_augment = true;
};

/// Requires normalized weights (each pair sums to 1 within 1e-9).
StatePrepSpec thetas_from_weights(const WeightedCnf& cnf);

/// Ry(theta_i) on each variable qubit, H on e. `qubit_count` widens the
/// circuit (defaults to variables + 1).
Circuit build_state_prep(const StatePrepSpec& spec, int qubit_count = 0);

/// Grover operator G = A (2|0><0| - I) A^dagger O on variables, e and clause
/// ancillas. The zero-state reflection is X-conjugated multi-controlled Z,
/// which realises -(2|0><0| - I); a trailing ZXZX on e multiplies by -1 so
/// the operator equals A (2|0><0| - I) A^dagger O exactly, and its
/// eigenphases on span{alpha, beta} are +-theta with
/// sin^2(theta/2) = WMC_normalized / 2.
CompiledCircuit build_grover(const WeightedCnf& cnf);

/// Adds `control` to every gate. The result spans max(width, control + 1)
/// qubits.
Circuit controlled(const Circuit& circuit, int control);

/// Brute-force basis states of the good/bad subspaces in the Grover register
/// (ancillas |0>), each carrying amplitude sqrt(0.5 W_x).
struct GroverSubspace {
  StateVector alpha;  // normalized; phi(x) and e false
  StateVector beta;   // normalized; phi(x) and e true (all-zero when empty)
  double sin_half_theta_squared;  // 0.5 * sum over models of W_x
};

/// Builds alpha and beta over layout.qubit_count() qubits from evaluate()
/// and assignment weights of the normalized formula.
GroverSubspace grover_subspace(const WeightedCnf& normalized_cnf);

struct GroverAngle {
  double theta = 0.0;               // 2 asin(sqrt(WMC_normalized / 2))
  std::optional<double> numeric;    // rotation angle extracted from G on span{alpha, beta}
  bool degenerate = false;          // beta empty; numeric check skipped
};

/// Analytic rotation angle, cross-checked against the eigenphases of G
/// restricted to span{alpha, beta}. Throws std::logic_error on a mismatch
/// above 1e-8 and GuardError for n > 12.
GroverAngle grover_angle(const WeightedCnf& cnf);

}  // namespace qwmc
