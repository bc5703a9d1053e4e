#include "qwmc/phase_estimation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwmc/statevector.hpp"
#include "qwmc/synthesis.hpp"

namespace qwmc {

int required_t(int m, double epsilon) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const double x = 2.0 + 1.0 / (2.0 * epsilon);
  // Smallest c with 2^c >= x; the slack absorbs rounding in 1/(2 epsilon),
  // e.g. epsilon = 1/12 must give exactly 8.
  int c = 0;
  while (std::ldexp(1.0, c) < x * (1.0 - 1e-12)) ++c;
  return m + c;
}

PrecisionParams PrecisionParams::from_accuracy(int m, double epsilon) {
  return {m, epsilon, required_t(m, epsilon)};
}

PrecisionParams PrecisionParams::with_width(int m, double epsilon, int t) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (t < m) throw std::invalid_argument("phase register width t must be >= m");
  return {m, epsilon, t};
}

Circuit build_qft(int t) {
  if (t < 1) throw std::invalid_argument("QFT width must be >= 1");
  Circuit circuit(t);
  for (int q = t - 1; q >= 0; --q) {
    circuit.add(Gate::h(q));
    for (int p = q - 1; p >= 0; --p) {
      circuit.add(Gate::phase(q, std::numbers::pi / std::ldexp(1.0, q - p), {p}));
    }
  }
  return circuit;
}

Circuit build_inverse_qft(int t) { return build_qft(t).adjoint(); }

std::uint64_t reverse_bits(std::uint64_t value, int width) {
  std::uint64_t out = 0;
  for (int b = 0; b < width; ++b) out |= ((value >> b) & 1U) << (width - 1 - b);
  return out;
}

std::uint64_t oracle_call_count(int t) { return (std::uint64_t{1} << t) - 1; }

namespace {

// Columns of the (2^S x 2^t) reshaped state whose phase bit j is set get
// multiplied by U^{2^j}.
void apply_controlled_powers_dense(StateVector& state, const Circuit& unitary, int t) {
  const int s = unitary.qubit_count();
  if (s > 12) throw GuardError("matrix power mode supports at most 12 system qubits");
  Eigen::MatrixXcd power = circuit_unitary(unitary);
  Eigen::Map<Eigen::MatrixXcd> block(state.amplitudes().data(), Eigen::Index{1} << s, Eigen::Index{1} << t);
  Eigen::VectorXcd tmp;
  for (int j = 0; j < t; ++j) {
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      if ((c >> j) & 1) {
        tmp.noalias() = power * block.col(c);
        block.col(c) = tmp;
      }
    }
    power = (power * power).eval();
  }
}

}  // namespace

Eigen::VectorXd phase_estimate(const Circuit& unitary, const Circuit& prep, const PrecisionParams& params,
                               PowerMode mode) {
  const int s = unitary.qubit_count();
  const int t = params.t;
  if (t < 1) throw std::invalid_argument("phase register width must be >= 1");
  if (prep.qubit_count() > s) throw std::invalid_argument("state preparation is wider than the unitary");
  const int total = s + t;
  if (total > kMaxQubits) {
    throw GuardError("phase estimation needs " + std::to_string(total) + " qubits (" + std::to_string(s) +
                     " system + " + std::to_string(t) + " phase), limit is " + std::to_string(kMaxQubits));
  }

  StateVector state(total);
  apply_circuit(state, prep.widened(total));
  for (int j = 0; j < t; ++j) apply_gate(state, Gate::h(s + j));

  if (mode == PowerMode::repeated) {
    const Circuit wide = unitary.widened(total);
    for (int j = 0; j < t; ++j) {
      const Circuit step = controlled(wide, s + j);
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << j); ++r) apply_circuit(state, step);
    }
  } else {
    apply_controlled_powers_dense(state, unitary, t);
  }

  // Inverse QFT qubit q lives on phase qubit t-1-q; it then holds bit q of y.
  std::vector<int> mapping(static_cast<std::size_t>(t));
  std::vector<int> readout(static_cast<std::size_t>(t));
  for (int q = 0; q < t; ++q) {
    mapping[static_cast<std::size_t>(q)] = s + t - 1 - q;
    readout[static_cast<std::size_t>(q)] = s + t - 1 - q;
  }
  apply_circuit(state, build_inverse_qft(t).remapped(mapping, total));
  return register_distribution(state, readout);
}

}  // namespace qwmc
