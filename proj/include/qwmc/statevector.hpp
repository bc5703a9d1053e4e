#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwmc/circuit.hpp"
#include "qwmc/cnf.hpp"

namespace qwmc {

/// Largest register the engine will allocate (2^28 amplitudes).
inline constexpr int kMaxQubits = 28;

/// Dense register state. Basis index i holds qubit k in bit k (qubit 0 is the
/// least significant bit).
template <typename Scalar>
class BasicStateVector {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// |0...0> on `qubit_count` qubits. Throws GuardError outside [1, kMaxQubits].
  explicit BasicStateVector(int qubit_count) : qubits_(qubit_count) {
    if (qubit_count < 1 || qubit_count > kMaxQubits) {
      throw GuardError("register of " + std::to_string(qubit_count) + " qubits outside the supported range [1, " +
                       std::to_string(kMaxQubits) + "]");
    }
    amplitudes_ = Vector::Zero(Eigen::Index{1} << qubit_count);
    amplitudes_(0) = Complex(1);
  }

  /// Wraps explicit amplitudes; the length must be a power of two.
  static BasicStateVector from_amplitudes(Vector amplitudes) {
    const auto size = amplitudes.size();
    int q = 0;
    while ((Eigen::Index{1} << q) < size) ++q;
    if (size < 2 || (Eigen::Index{1} << q) != size) {
      throw std::invalid_argument("amplitude vector length must be a power of two >= 2");
    }
    BasicStateVector s(q);
    s.amplitudes_ = std::move(amplitudes);
    return s;
  }

  /// Computational basis state |index>.
  static BasicStateVector basis(int qubit_count, std::uint64_t index) {
    BasicStateVector s(qubit_count);
    if (index >= s.dimension()) throw std::invalid_argument("basis index out of range");
    s.amplitudes_(0) = Complex(0);
    s.amplitudes_(static_cast<Eigen::Index>(index)) = Complex(1);
    return s;
  }

  int qubit_count() const { return qubits_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << qubits_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Vector& amplitudes() { return amplitudes_; }
  Complex operator[](std::uint64_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  Scalar norm() const { return amplitudes_.norm(); }

 private:
  int qubits_;
  Vector amplitudes_;
};

using StateVector = BasicStateVector<double>;

inline StateVector new_state(int qubit_count) { return StateVector(qubit_count); }

namespace detail {

inline void check_indices(const Gate& g, int qubit_count) {
  if (g.target < 0 || g.target >= qubit_count) {
    throw std::invalid_argument("gate target " + std::to_string(g.target) + " outside register of " +
                                std::to_string(qubit_count) + " qubits");
  }
  std::uint64_t seen = std::uint64_t{1} << g.target;
  for (int c : g.controls) {
    if (c < 0 || c >= qubit_count) throw std::invalid_argument("control " + std::to_string(c) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (seen & bit) throw std::invalid_argument("control " + std::to_string(c) + " collides with target or control");
    seen |= bit;
  }
}

/// Calls body(i0, i1) for every index pair differing only in the target bit
/// with all control bits set (i0 has the target bit clear).
template <typename Body>
void for_each_pair(int qubit_count, const Gate& g, Body&& body) {
  std::vector<int> fixed = g.controls;
  fixed.push_back(g.target);
  std::sort(fixed.begin(), fixed.end());
  std::uint64_t control_mask = 0;
  for (int c : g.controls) control_mask |= std::uint64_t{1} << c;
  const std::uint64_t target_bit = std::uint64_t{1} << g.target;
  const std::uint64_t count = std::uint64_t{1} << (qubit_count - static_cast<int>(fixed.size()));
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t i = k;
    for (int p : fixed) {
      const std::uint64_t low = i & ((std::uint64_t{1} << p) - 1);
      i = ((i >> p) << (p + 1)) | low;
    }
    i |= control_mask;
    body(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i | target_bit));
  }
}

}  // namespace detail

/// Applies one gate in place. Norm is preserved.
template <typename Scalar>
void apply_gate(BasicStateVector<Scalar>& state, const Gate& gate) {
  using Complex = std::complex<Scalar>;
  detail::check_indices(gate, state.qubit_count());
  auto& a = state.amplitudes();
  const int q = state.qubit_count();
  switch (gate.kind) {
    case GateKind::X:
      detail::for_each_pair(q, gate, [&](Eigen::Index i0, Eigen::Index i1) { std::swap(a(i0), a(i1)); });
      break;
    case GateKind::H: {
      const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
      detail::for_each_pair(q, gate, [&](Eigen::Index i0, Eigen::Index i1) {
        const Complex u = a(i0), v = a(i1);
        a(i0) = r * (u + v);
        a(i1) = r * (u - v);
      });
      break;
    }
    case GateKind::Ry: {
      const Scalar c = std::cos(Scalar(gate.angle) / 2), s = std::sin(Scalar(gate.angle) / 2);
      detail::for_each_pair(q, gate, [&](Eigen::Index i0, Eigen::Index i1) {
        const Complex u = a(i0), v = a(i1);
        a(i0) = c * u - s * v;
        a(i1) = s * u + c * v;
      });
      break;
    }
    case GateKind::Z:
      detail::for_each_pair(q, gate, [&](Eigen::Index, Eigen::Index i1) { a(i1) = -a(i1); });
      break;
    case GateKind::Phase: {
      const Complex phase = std::polar(Scalar(1), Scalar(gate.angle));
      detail::for_each_pair(q, gate, [&](Eigen::Index, Eigen::Index i1) { a(i1) *= phase; });
      break;
    }
  }
}

/// Applies the circuit's gates in order. The circuit must span exactly the
/// state's qubits.
template <typename Scalar>
void apply_circuit(BasicStateVector<Scalar>& state, const Circuit& circuit) {
  if (circuit.qubit_count() != state.qubit_count()) {
    throw std::invalid_argument("circuit spans " + std::to_string(circuit.qubit_count()) + " qubits, state has " +
                                std::to_string(state.qubit_count()));
  }
  for (const Gate& g : circuit.gates()) apply_gate(state, g);
}

/// Marginal distribution of the listed qubits; bit j of the outcome index is
/// the value of qubits[j].
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> register_distribution(const BasicStateVector<Scalar>& state,
                                                                const std::vector<int>& qubits) {
  std::uint64_t seen = 0;
  for (int q : qubits) {
    if (q < 0 || q >= state.qubit_count()) throw std::invalid_argument("measured qubit out of range");
    if (seen & (std::uint64_t{1} << q)) throw std::invalid_argument("duplicate measured qubit " + std::to_string(q));
    seen |= std::uint64_t{1} << q;
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> probs =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(Eigen::Index{1} << qubits.size());
  const auto& a = state.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Scalar p = std::norm(a(i));
    if (p == Scalar(0)) continue;
    Eigen::Index j = 0;
    for (std::size_t b = 0; b < qubits.size(); ++b) {
      j |= static_cast<Eigen::Index>((static_cast<std::uint64_t>(i) >> qubits[b]) & 1U) << b;
    }
    probs(j) += p;
  }
  return probs;
}

/// Inverse-CDF draw from a probability vector.
template <typename Derived, typename Rng>
std::uint64_t sample_index(const Eigen::MatrixBase<Derived>& probs, Rng& rng) {
  using Scalar = typename Derived::Scalar;
  const Scalar total = probs.sum();
  std::uniform_real_distribution<Scalar> unit(Scalar(0), total);
  const Scalar u = unit(rng);
  Scalar cdf = 0;
  Eigen::Index last_positive = 0;
  for (Eigen::Index j = 0; j < probs.size(); ++j) {
    if (probs(j) <= Scalar(0)) continue;
    cdf += probs(j);
    last_positive = j;
    if (u < cdf) return static_cast<std::uint64_t>(j);
  }
  return static_cast<std::uint64_t>(last_positive);
}

/// Computational-basis measurement of `qubits`, without collapsing the state.
template <typename Scalar, typename Rng>
std::uint64_t sample_measurement(const BasicStateVector<Scalar>& state, const std::vector<int>& qubits, Rng& rng) {
  return sample_index(register_distribution(state, qubits), rng);
}

/// |<a|b>|^2
template <typename Scalar>
Scalar fidelity(const BasicStateVector<Scalar>& a, const BasicStateVector<Scalar>& b) {
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

/// Dense matrix of a circuit; column j is the image of basis state |j>.
template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> circuit_unitary(const Circuit& circuit) {
  const Eigen::Index dim = Eigen::Index{1} << circuit.qubit_count();
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    auto s = BasicStateVector<Scalar>::basis(circuit.qubit_count(), static_cast<std::uint64_t>(j));
    apply_circuit(s, circuit);
    u.col(j) = s.amplitudes();
  }
  return u;
}

}  // namespace qwmc
