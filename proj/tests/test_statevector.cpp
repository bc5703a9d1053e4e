#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwmc/statevector.hpp"
#include "qwmc/synthesis.hpp"
#include "test_support.hpp"

namespace qwmc {
namespace {

using C = std::complex<double>;

TEST(NewState, Basis) {
  const StateVector one = new_state(1);
  EXPECT_EQ(one.amplitudes().size(), 2);
  EXPECT_EQ(one[0], C(1));
  EXPECT_EQ(one[1], C(0));
  const StateVector three = new_state(3);
  EXPECT_EQ(three.amplitudes().size(), 8);
  EXPECT_EQ(three[0], C(1));
  EXPECT_DOUBLE_EQ(three.norm(), 1.0);
  EXPECT_THROW(new_state(29), GuardError);
  EXPECT_THROW(new_state(0), GuardError);
}

TEST(ApplyGate, HadamardOnZero) {
  StateVector s = new_state(1);
  apply_gate(s, Gate::h(0));
  EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(ApplyGate, RyOnZero) {
  for (double theta : {0.0, 0.3, 1.0, std::numbers::pi / 2, 2.5, std::numbers::pi}) {
    StateVector s = new_state(1);
    apply_gate(s, Gate::ry(0, theta));
    EXPECT_NEAR(std::abs(s[0] - C(std::cos(theta / 2))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[1] - C(std::sin(theta / 2))), 0.0, 1e-15);
  }
}

TEST(ApplyGate, ControlledXFlipsTargetWhenControlSet) {
  // control = qubit 1, target = qubit 0; |10> is index 2, |11> is index 3.
  StateVector s = StateVector::basis(2, 0b10);
  apply_gate(s, Gate::x(0, {1}));
  EXPECT_EQ(s[0b11], C(1));
  StateVector t = StateVector::basis(2, 0b01);
  apply_gate(t, Gate::x(0, {1}));
  EXPECT_EQ(t[0b01], C(1));  // control clear: unchanged
}

TEST(ApplyGate, RejectsBadIndices) {
  StateVector s = new_state(2);
  EXPECT_THROW(apply_gate(s, Gate::x(2)), std::invalid_argument);
  EXPECT_THROW(apply_gate(s, Gate::x(0, {0})), std::invalid_argument);
  EXPECT_THROW(apply_gate(s, Gate::x(0, {1, 1})), std::invalid_argument);
  EXPECT_THROW(apply_gate(s, Gate::x(0, {-1})), std::invalid_argument);
}

TEST(ApplyCircuit, EmptyAndDoubleHadamard) {
  std::mt19937_64 rng(3);
  const StateVector start = testing::random_state(3, rng);
  StateVector s = start;
  apply_circuit(s, Circuit(3));
  EXPECT_EQ(s.amplitudes(), start.amplitudes());
  Circuit hh(3);
  hh.add(Gate::h(0)).add(Gate::h(0));
  apply_circuit(s, hh);
  EXPECT_LT((s.amplitudes() - start.amplitudes()).norm(), 1e-12);
  EXPECT_THROW(apply_circuit(s, Circuit(2)), std::invalid_argument);
}

TEST(ApplyCircuit, FormulaCircuitOnSprinklerRow011) {
  // s = 0, r = 1, w = 1 on qubits 0, 1, 2.
  const auto [circuit, layout] = build_formula_circuit(sprinkler_cnf());
  StateVector s = StateVector::basis(circuit.qubit_count(), 0b110);
  apply_circuit(s, circuit);
  const auto p = register_distribution(s, {layout.result_qubit()});
  EXPECT_NEAR(p(1), 1.0, 1e-12);
}

TEST(RegisterDistribution, Examples) {
  StateVector s = new_state(1);
  apply_gate(s, Gate::h(0));
  const auto p = register_distribution(s, {0});
  EXPECT_NEAR(p(0), 0.5, 1e-15);
  EXPECT_NEAR(p(1), 0.5, 1e-15);

  StateVector r = new_state(1);
  apply_gate(r, Gate::ry(0, 2 * std::acos(std::sqrt(0.7))));
  const auto q = register_distribution(r, {0});
  EXPECT_NEAR(q(0), 0.7, 1e-12);
  EXPECT_NEAR(q(1), 0.3, 1e-12);

  std::mt19937_64 rng(5);
  const StateVector x = testing::random_state(4, rng);
  const auto full = register_distribution(x, {0, 1, 2, 3});
  EXPECT_LT((full - x.amplitudes().cwiseAbs2()).norm(), 1e-15);
  EXPECT_NEAR(register_distribution(x, {2, 0}).sum(), 1.0, 1e-9);
  EXPECT_THROW(register_distribution(x, {1, 1}), std::invalid_argument);
}

TEST(RegisterDistribution, BitOrderFollowsQubitList) {
  const StateVector s = StateVector::basis(3, 0b001);  // qubit 0 set
  EXPECT_NEAR(register_distribution(s, {0, 2})(0b01), 1.0, 1e-15);
  EXPECT_NEAR(register_distribution(s, {2, 0})(0b10), 1.0, 1e-15);
}

TEST(SampleMeasurement, DeterministicOutcomes) {
  const StateVector one = StateVector::basis(1, 1);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_measurement(one, {0}, rng), 1u);
}

TEST(SampleMeasurement, UniformFrequencies) {
  StateVector s = new_state(2);
  apply_gate(s, Gate::h(0));
  apply_gate(s, Gate::h(1));
  std::mt19937_64 rng(42);
  std::array<int, 4> counts{};
  const int shots = 100000;
  for (int i = 0; i < shots; ++i) ++counts[sample_measurement(s, {0, 1}, rng)];
  for (int c : counts) EXPECT_NEAR(c / double(shots), 0.25, 0.01);
}

TEST(SampleMeasurement, SeedReproducesSequence) {
  std::mt19937_64 seed_rng(9);
  const StateVector s = testing::random_state(3, seed_rng);
  std::mt19937_64 a(123), b(123);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(sample_measurement(s, {0, 1, 2}, a), sample_measurement(s, {0, 1, 2}, b));
}

Gate random_gate(std::mt19937_64& rng, int qubits) {
  std::uniform_int_distribution<int> q(0, qubits - 1);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
  std::bernoulli_distribution take(0.3);
  Gate g;
  g.kind = static_cast<GateKind>(kind(rng));
  g.target = q(rng);
  g.angle = angle(rng);
  for (int c = 0; c < qubits; ++c) {
    if (c != g.target && take(rng)) g.controls.push_back(c);
  }
  return g;
}

TEST(EngineProperty, Unitarity) {
  std::mt19937_64 rng(2024);
  StateVector s = testing::random_state(6, rng);
  for (int i = 0; i < 1000; ++i) {
    apply_gate(s, random_gate(rng, 6));
    ASSERT_LT(std::abs(s.norm() - 1.0), 1e-10) << "after gate " << i;
  }
}

TEST(EngineProperty, Linearity) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const StateVector u = testing::random_state(4, rng);
    const StateVector v = testing::random_state(4, rng);
    const C a(0.6, -0.2), b(-0.3, 0.7);
    const Gate g = random_gate(rng, 4);
    StateVector combo = StateVector::from_amplitudes(a * u.amplitudes() + b * v.amplitudes());
    StateVector gu = u, gv = v;
    apply_gate(combo, g);
    apply_gate(gu, g);
    apply_gate(gv, g);
    EXPECT_LT((combo.amplitudes() - (a * gu.amplitudes() + b * gv.amplitudes())).norm(), 1e-10);
  }
}

TEST(EngineProperty, ControlledGateIsIdentityWhenAnyControlIsZero) {
  std::mt19937_64 rng(5);
  for (int qubits = 2; qubits <= 5; ++qubits) {
    for (int trial = 0; trial < 20; ++trial) {
      Gate g = random_gate(rng, qubits);
      if (g.controls.empty()) g.controls.push_back((g.target + 1) % qubits);
      std::uint64_t mask = 0;
      for (int c : g.controls) mask |= std::uint64_t{1} << c;
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << qubits); ++i) {
        if ((i & mask) == mask) continue;
        StateVector s = StateVector::basis(qubits, i);
        apply_gate(s, g);
        EXPECT_EQ(s[i], C(1)) << "basis " << i;
      }
    }
  }
}

TEST(EngineProperty, SelfInverseGates) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const StateVector start = testing::random_state(3, rng);
    const double theta = std::uniform_real_distribution<double>(-7, 7)(rng);
    for (const auto& pair : {std::pair{Gate::x(1), Gate::x(1)}, std::pair{Gate::h(2), Gate::h(2)},
                             std::pair{Gate::ry(0, theta), Gate::ry(0, -theta)}, std::pair{Gate::z(1), Gate::z(1)}}) {
      StateVector s = start;
      apply_gate(s, pair.first);
      apply_gate(s, pair.second);
      EXPECT_LT((s.amplitudes() - start.amplitudes()).norm(), 1e-12);
    }
  }
}

TEST(CircuitUnitary, MatchesGateMatrices) {
  Circuit c(1);
  c.add(Gate::h(0));
  const Eigen::MatrixXcd h = circuit_unitary(c);
  Eigen::Matrix2cd expected;
  expected << 1, 1, 1, -1;
  expected /= std::sqrt(2.0);
  EXPECT_LT((h - expected).norm(), 1e-15);
}

TEST(CircuitDump, RoundTripsExactly) {
  std::mt19937_64 rng(31);
  Circuit c(5);
  for (int i = 0; i < 200; ++i) c.add(random_gate(rng, 5));  // add() zeroes unused angles
  const Circuit back = parse_circuit_dump(dump_circuit(c));
  EXPECT_EQ(back, c);
  EXPECT_THROW(parse_circuit_dump("GATE X 0 []\n"), std::invalid_argument);
  EXPECT_THROW(parse_circuit_dump("QUBITS 2\nGATE Q 0 []\n"), std::invalid_argument);
}

}  // namespace
}  // namespace qwmc
