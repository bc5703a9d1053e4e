#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qwmc {

enum class GateKind { X, H, Ry, Z, Phase };

/// Single-target gate with an all-ones control set.
///
/// `angle` is used by Ry (rotation angle) and Phase (diag(1, e^{i angle}));
/// it is ignored otherwise.
struct Gate {
  GateKind kind = GateKind::X;
  int target = 0;
  std::vector<int> controls;
  double angle = 0.0;

  static Gate x(int target, std::vector<int> controls = {}) { return {GateKind::X, target, std::move(controls), 0.0}; }
  static Gate h(int target, std::vector<int> controls = {}) { return {GateKind::H, target, std::move(controls), 0.0}; }
  static Gate z(int target, std::vector<int> controls = {}) { return {GateKind::Z, target, std::move(controls), 0.0}; }
  static Gate ry(int target, double theta, std::vector<int> controls = {}) {
    return {GateKind::Ry, target, std::move(controls), theta};
  }
  static Gate phase(int target, double lambda, std::vector<int> controls = {}) {
    return {GateKind::Phase, target, std::move(controls), lambda};
  }

  /// Largest qubit index touched.
  int max_qubit() const;
  /// The inverse gate (X, H, Z are self-inverse; Ry and Phase negate the angle).
  Gate adjoint() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed number of qubits.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int qubit_count);

  int qubit_count() const { return qubit_count_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends a gate. Throws std::invalid_argument when an index is out of
  /// range, the target is among the controls, or a control repeats.
  Circuit& add(Gate gate);
  /// Appends every gate of `other`; other.qubit_count() must not exceed ours.
  Circuit& append(const Circuit& other);

  /// Reversed gate list with each gate inverted.
  Circuit adjoint() const;
  /// Copy widened to `qubit_count` qubits.
  Circuit widened(int qubit_count) const;
  /// Copy with qubit q renamed to mapping[q]; the result spans `qubit_count` qubits.
  Circuit remapped(const std::vector<int>& mapping, int qubit_count) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int qubit_count_ = 0;
  std::vector<Gate> gates_;
};

std::string_view to_string(GateKind kind);

/// Text dump, one gate per line after a QUBITS header:
///
///     QUBITS 5
///     GATE X 3 [0,1]
///     GATE RY 0 [] 1.1592794807274085
///
/// Angles use 17 significant digits, so parse_circuit_dump reconstructs the
/// gate list exactly.
std::string dump_circuit(const Circuit& circuit);
Circuit parse_circuit_dump(std::string_view text);

}  // namespace qwmc
