#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "qwmc/circuit.hpp"

namespace qwmc {

/// t-bit phase register sized to give m accurate bits with failure
/// probability at most epsilon.
struct PrecisionParams {
  int m = 1;
  double epsilon = 0.25;
  int t = 3;

  /// t = m + ceil(log2(2 + 1/(2 epsilon))).
  static PrecisionParams from_accuracy(int m, double epsilon);
  /// Explicit register width; must satisfy t >= m.
  static PrecisionParams with_width(int m, double epsilon, int t);
};

int required_t(int m, double epsilon);

/// Swap-free QFT over qubits 0..t-1: H plus a controlled-phase ladder,
/// t(t+1)/2 gates. Input |j> (qubit k = bit k of j) maps to
/// 2^{-t/2} sum_k e^{2 pi i j k / 2^t} |reverse_bits(k)>, i.e. the output
/// register is bit-reversed in place of the usual final swaps.
Circuit build_qft(int t);
/// Adjoint of build_qft(t); expects its input in the bit-reversed layout.
Circuit build_inverse_qft(int t);

std::uint64_t reverse_bits(std::uint64_t value, int width);

enum class PowerMode {
  repeated,  // controlled-U applied 2^j times; the faithful oracle-call path
  matrix,    // dense U^{2^j} by squaring; test-only shortcut for wide t
};

/// Phase estimation of `unitary` on the state prepared by `prep` from
/// |0...0>. Both act on the system qubits 0..S-1 (S = unitary.qubit_count());
/// the phase register occupies S..S+t-1, qubit S+j controlling U^{2^j}.
/// Returns the distribution of the measured t-bit outcome y, whose estimate
/// of the eigenphase is y / 2^t.
Eigen::VectorXd phase_estimate(const Circuit& unitary, const Circuit& prep, const PrecisionParams& params,
                               PowerMode mode = PowerMode::repeated);

/// Applications of U made by phase_estimate: 2^t - 1.
std::uint64_t oracle_call_count(int t);

}  // namespace qwmc
