// Copyright 2026 The qsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "qsynth/amplitude_tree.hpp"
#include "qsynth/bit_oracle.hpp"
#include "qsynth/error.hpp"
#include "qsynth/indexing.hpp"
#include "qsynth/resources.hpp"
#include "qsynth/simulate.hpp"
#include "qsynth/state_circuit.hpp"
#include "support.hpp"

namespace qsynth {
namespace {

StateVector amps(std::vector<Complex> v) { return StateVector::from_amplitudes(std::move(v)); }

StateVector bell() {
  const double r = 1 / std::sqrt(2.0);
  return amps({r, 0, 0, r});
}

// Recursion written out with plain heap arithmetic: node of prefix y is
// 2^{|y|} + y.
std::uint64_t reference_f(const std::vector<bool>& x, std::size_t n) {
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t node = (std::size_t{1} << i) + y;
    y = (y << 1) | (x[node] ? 1U : 0U);
  }
  return y;
}

// Runs the full circuit from |0...0> and returns the output register,
// restricted to every other qubit being |0>.
StateVector run_full(const CircuitIR& c) {
  const SparseState out = run_basis(c, {}, BasisKey(c.num_qubits()), SimulationLimits{14, 0});
  return out.restrict_to(c.find_register("output")->qubits());
}

TEST(AmplitudeTree, SingleQubit) {
  const AmplitudeTree t = amplitude_tree(amps({Complex(0.6, 0), Complex(0, 0.8)}));
  EXPECT_LT(std::abs(t.at(BitString::parse("0")) - 0.6), 1e-15);
  EXPECT_LT(std::abs(t.at(BitString::parse("1")) - Complex(0, 0.8)), 1e-15);
}

TEST(AmplitudeTree, BellState) {
  const AmplitudeTree t = amplitude_tree(bell());
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(t.at(BitString::parse("0")) - r), 0, 1e-15);
  EXPECT_NEAR(std::abs(t.at(BitString::parse("1")) - r), 0, 1e-15);
  EXPECT_NEAR(std::abs(t.at(BitString::parse("00")) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(t.at(BitString::parse("01"))), 0, 1e-15);
  EXPECT_NEAR(std::abs(t.at(BitString::parse("10"))), 0, 1e-15);
  EXPECT_NEAR(std::abs(t.at(BitString::parse("11")) - 1.0), 0, 1e-15);
}

TEST(AmplitudeTree, ZeroMassConvention) {
  const AmplitudeTree t = amplitude_tree(StateVector(3));
  EXPECT_EQ(t.at(BitString::parse("000")), Complex(1));
  // Prefix "1" carries no mass: its children follow the convention.
  EXPECT_EQ(t.at(BitString::parse("10")), Complex(1));
  EXPECT_EQ(t.at(BitString::parse("11")), Complex(0));
  EXPECT_EQ(t.at(BitString::parse("1")), Complex(0));
}

TEST(AmplitudeTree, RejectsUnnormalized) {
  try {
    amplitude_tree(amps({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnnormalizedState);
  }
}

// Property: children of every prefix are unit-norm and the product of
// conditional amplitudes along each path recovers psi.
TEST(StatesynthProperty, TreeRoundTrip) {
  Rng rng(31);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const StateVector psi = random_state(n, rng);
      const AmplitudeTree t = amplitude_tree(psi);
      for (std::size_t h = 1; h < (std::size_t{1} << n); ++h) {
        EXPECT_NEAR(std::norm(t.beta[2 * h]) + std::norm(t.beta[2 * h + 1]), 1.0, 1e-10);
      }
      for (std::uint64_t x = 0; x < psi.size(); ++x) {
        Complex prod = 1;
        for (std::size_t i = 1; i <= n; ++i) prod *= t.at(BitString{n, x}.prefix(i));
        EXPECT_LT(std::abs(prod - psi[x]), 1e-9);
      }
      EXPECT_LT(l2_distance(t.reconstruct(), psi), 1e-9);
    }
  }
}

TEST(Indexing, EvalExamples) {
  EXPECT_EQ(eval_f(PrefixAssignment(8, false), 3).str(), "000");
  PrefixAssignment a(4, false);
  a[1] = true;  // x_eps
  a[3] = true;  // x_1
  EXPECT_EQ(eval_f(a, 2).str(), "11");
  PrefixAssignment b(8, false);
  b[1] = true;  // x_eps
  b[3] = true;  // x_1
  b[7] = false;  // x_11
  EXPECT_EQ(eval_f(b, 3).str(), "110");
}

// Property: y = f(x) satisfies y_i = x_{y_<i} for all i.
TEST(StatesynthProperty, FFixedPoint) {
  Rng rng(32);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      PrefixAssignment x(std::size_t{1} << n);
      for (std::size_t h = 1; h < x.size(); ++h) x[h] = rng() & 1U;
      const BitString y = eval_f(x, n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(y.bit(i), x[y.prefix(i).heap_index()]);
      EXPECT_EQ(y.value, reference_f(x, n));
    }
  }
}

TEST(Indexing, DnfShape) {
  const Dnf one = build_f_dnf(1);
  ASSERT_EQ(one.outputs.size(), 1U);
  ASSERT_EQ(one.outputs[0].size(), 1U);
  ASSERT_EQ(one.outputs[0][0].literals.size(), 1U);
  EXPECT_EQ(one.outputs[0][0].literals[0].node, 1U);
  EXPECT_TRUE(one.outputs[0][0].literals[0].want);
  for (std::size_t n = 1; n <= 8; ++n) {
    const Dnf d = build_f_dnf(n);
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(d.outputs[j - 1].size(), std::size_t{1} << (j - 1));
    EXPECT_LE(d.num_literals(), n << n);
  }
}

// Property: the DNF agrees with the recursion on every assignment, n <= 4.
TEST(StatesynthProperty, DnfEqualsRecursionExhaustively) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Dnf d = build_f_dnf(n);
    const std::size_t bits = (std::size_t{1} << n) - 1;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
      PrefixAssignment x(bits + 1);
      for (std::size_t h = 1; h <= bits; ++h) x[h] = (v >> (h - 1)) & 1U;
      ASSERT_EQ(d.evaluate(x).value, reference_f(x, n)) << "n=" << n << " v=" << v;
      ++total;
    }
  }
  EXPECT_EQ(total, 2U + 8U + 128U + 32768U);
}

TEST(Qacf0State, ZeroStateLeavesEverythingClean) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const CircuitIR c = build_qacf0_state_circuit(StateVector(n));
    const StateVector out = run_full(c);
    EXPECT_NEAR(std::norm(out[0]), 1.0, 1e-12);
  }
}

TEST(Qacf0State, BellFullSimulation) {
  const CircuitIR c = build_qacf0_state_circuit(bell());
  EXPECT_EQ(c.gate_class(), GateClass::QACf0);
  const StateVector out = run_full(c);
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);  // all ancillae back at |0>
  EXPECT_GE(fidelity(out, bell()), 1 - 1e-9);
}

TEST(Qacf0State, RandomThreeQubitStates) {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = random_state(3, rng);
    const CompactSynthesis s = compact_state_synthesis(amplitude_tree(psi));
    EXPECT_LT(s.residue, 1e-12);
    EXPECT_GE(fidelity(s.output, psi), 1 - 1e-9);
  }
  const StateVector psi = random_state(3, rng);
  const StateVector out = run_full(build_qacf0_state_circuit(psi));
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-10);
  EXPECT_GE(fidelity(out, psi), 1 - 1e-9);
}

TEST(Qacf0State, SparseStatesExerciseZeroMassBranches) {
  const double r = 1 / std::sqrt(2.0);
  std::vector<Complex> v(8, 0);
  v[0b000] = r;
  v[0b101] = Complex(0, r);
  const StateVector psi = amps(v);
  EXPECT_GE(fidelity(run_full(build_qacf0_state_circuit(psi)), psi), 1 - 1e-9);
  EXPECT_GE(fidelity(run_full(build_qnc_state_circuit(psi)), psi), 1 - 1e-9);
  std::vector<Complex> w(16, 0);
  w[0b1111] = 1;
  EXPECT_GE(fidelity(compact_state_synthesis(amplitude_tree(amps(w))).output, amps(w)), 1 - 1e-12);
}

// Property: the QAC_f^0 layer count does not depend on n.
TEST(StatesynthProperty, ConstantLayerCount) {
  Rng rng(34);
  const std::size_t layers = build_qacf0_state_circuit(random_state(2, rng)).depth();
  for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(build_qacf0_state_circuit(random_state(n, rng)).depth(), layers) << n;
}

TEST(QncState, SingleQubitIsOneGate) {
  const CircuitIR c = build_qnc_state_circuit(amps({0.6, 0.8}));
  EXPECT_EQ(c.depth(), 1U);
  EXPECT_EQ(c.size(), 1U);
  EXPECT_EQ(c.gate_class(), GateClass::QNC);
}

TEST(QncState, BellSimulation) {
  const StateVector out = run_full(build_qnc_state_circuit(bell()));
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
  EXPECT_GE(fidelity(out, bell()), 1 - 1e-9);
}

TEST(QncState, DepthOverNBounded) {
  Rng rng(35);
  for (std::size_t n = 1; n <= 6; ++n) {
    const CircuitIR c = build_qnc_state_circuit(random_state(n, rng));
    EXPECT_EQ(c.gate_class(), GateClass::QNC);
    EXPECT_LE(static_cast<double>(c.depth()) / static_cast<double>(n), 50.0) << n;
  }
}

TEST(FixedPointCodec, RoundTripWithinHalfStep) {
  Rng rng(36);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t b : {2, 8, 16, 30}) {
    const FixedPoint f{b};
    const double step = 1 / (std::pow(2.0, static_cast<double>(b)) - 1);
    EXPECT_EQ(f.decode(f.encode(1.0)), 1.0);
    EXPECT_EQ(f.decode(f.encode(-1.0)), -1.0);
    EXPECT_EQ(f.decode(f.encode(0.0)), 0.0);
    for (int i = 0; i < 100; ++i) {
      const double v = u(rng);
      EXPECT_LE(std::abs(f.decode(f.encode(v)) - v), step / 2 + 1e-15);
    }
  }
}

TEST(HexCodec, RoundTripAndErrors) {
  const std::vector<bool> bits{true, false, true, true, false, false, true};
  EXPECT_EQ(hex_to_bits(bits_to_hex(bits), bits.size()), bits);
  try {
    hex_to_bits("zz", 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedOracle);
  }
}

TEST(BetaOracle, BasisStateEncodesExactly) {
  for (std::size_t b : {2, 9, 20}) {
    const ClassicalBitOracle o = beta_oracle(amps({1, 0}), b);
    const auto v = o.decode(o.lookup(1));
    EXPECT_EQ(v[0], Complex(1));
    EXPECT_EQ(v[1], Complex(0));
  }
}

TEST(BetaOracle, PlusStateWithinRounding) {
  const double r = 1 / std::sqrt(2.0);
  const ClassicalBitOracle o = beta_oracle(amps({r, r}), 16);
  const auto v = o.decode(o.lookup(1));
  EXPECT_LE(std::abs(v[0].real() - r), std::pow(2.0, -15));
  EXPECT_LE(std::abs(v[1].real() - r), std::pow(2.0, -15));
}

TEST(BetaOracle, SizeForThreeQubits) {
  Rng rng(37);
  const ClassicalBitOracle o = beta_oracle(random_state(3, rng), 8);
  EXPECT_EQ(o.entries.size(), 7U);  // one address per prefix of length < 3
  EXPECT_EQ(o.value_width(), 36U);  // 4 fields of sign + 8 magnitude bits
  EXPECT_EQ(o.total_bits(), 7U * 36U);
  EXPECT_LE(o.total_bits(), (std::size_t{1} << 4) * 4 * 8);
}

TEST(OracleSynth, ZeroStateExact) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const OracleSynthesis s = oracle_state_synth(n, beta_oracle(StateVector(n), 4));
    EXPECT_NEAR(std::norm(s.state[0]), 1.0, 1e-15);
    EXPECT_EQ(s.queries, 2 * n);
  }
}

TEST(OracleSynth, PlusPlusAtSixteenBits) {
  const StateVector psi = amps({0.5, 0.5, 0.5, 0.5});
  const OracleSynthesis s = oracle_state_synth(2, beta_oracle(psi, 16));
  EXPECT_LE(trace_distance(s.state, psi), 1e-3);
}

TEST(OracleSynth, ErrorShrinksWithPrecision) {
  Rng rng(38);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi = random_state(3, rng);
    double prev = 1;
    for (std::size_t b : {4, 8, 12, 16, 20}) {
      const OracleSynthesis s = oracle_state_synth(3, beta_oracle(psi, b));
      const double d = trace_distance(s.state, psi);
      EXPECT_LE(d, prev * 1.1) << "b=" << b;
      prev = d;
    }
    EXPECT_LE(prev, 1e-4);
  }
}

}  // namespace
}  // namespace qsynth
