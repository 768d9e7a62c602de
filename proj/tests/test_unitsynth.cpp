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

#include <map>
#include <numbers>

#include "qsynth/error.hpp"
#include "qsynth/lowering.hpp"
#include "qsynth/qram.hpp"
#include "qsynth/resources.hpp"
#include "qsynth/unitsynth.hpp"
#include "support.hpp"

namespace qsynth {
namespace {

Bindings bind(const QramOracle& a) { return {{kQramOracle, a.binding()}}; }

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

TEST(ControlledSink, MatchesControlledReference) {
  Rng rng(41);
  const std::size_t k = 4;
  for (int trial = 0; trial < 15; ++trial) {
    CircuitIR inner(k, GateClass::QACf0);
    ControlledSink sink;
    for (int g = 0; g < 10; ++g) {
      const auto q = testing::distinct_qubits(k, 3, rng);
      Gate gate = Gate::one_qubit(q[0], (rng() & 1U) ? gates::x() : testing::random_one_qubit(rng));
      switch (rng() % 3) {
        case 1: gate = Gate::toffoli(q[0], {q[1], q[2]}); break;
        case 2: gate = Gate::fanout(q[0], {q[1], q[2]}); break;
        default: break;
      }
      inner.append(gate);
      sink.append(gate);
    }
    const std::size_t nc = sink.controls_needed();
    const std::size_t ns = sink.scratch_needed();
    const std::size_t nq = k + nc + ns;
    std::vector<Qubit> controls, scratch;
    for (std::size_t i = 0; i < nc; ++i) controls.push_back(static_cast<Qubit>(k + i));
    for (std::size_t i = 0; i < ns; ++i) scratch.push_back(static_cast<Qubit>(k + nc + i));
    CircuitIR out(nq, GateClass::QACf0);
    sink.flush(out, controls, scratch);
    const Matrix ref = testing::reference_circuit_matrix(inner);
    const Matrix got = circuit_as_matrix(out);
    for (int on = 0; on < 2; ++on) {
      const std::uint64_t ctl = on ? ((std::uint64_t{1} << nc) - 1) << ns : 0;
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) {
        const auto col = static_cast<Eigen::Index>((y << (nc + ns)) | ctl);
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << k); ++z) {
          const auto row = static_cast<Eigen::Index>((z << (nc + ns)) | ctl);
          const Complex want = on ? ref(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(y)) : Complex(z == y);
          EXPECT_LT(std::abs(got(row, col) - want), 1e-10);
        }
      }
    }
  }
}

TEST(GateLevelQram, HadamardAndIdentity) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const GateLevelQram a = build_gate_level_qram(h);
  EXPECT_EQ(a.circuit.gate_class(), GateClass::QACf0);
  EXPECT_TRUE(verify_qram(circuit_qram(a.circuit, 1, h), h).ok);
  const Matrix id = Matrix::Identity(4, 4);
  const GateLevelQram b = build_gate_level_qram(id);
  EXPECT_TRUE(verify_qram(circuit_qram(b.circuit, 2, id), id).ok);
  EXPECT_EQ(b.layout.r.size(), 4U);
}

TEST(GateLevelQram, RandomAndLoweredSatisfyDefinition) {
  Rng rng(42);
  for (std::size_t n = 1; n <= 2; ++n) {
    const Matrix u = random_unitary(n, rng);
    const GateLevelQram a = build_gate_level_qram(u);
    const QramCheck c = verify_qram(circuit_qram(a.circuit, n, u), u);
    EXPECT_TRUE(c.ok) << c.worst_deviation;
    const CircuitIR low = lower_to_qnc(a.circuit);
    EXPECT_EQ(low.gate_class(), GateClass::QNC);
    EXPECT_TRUE(verify_qram(circuit_qram(low, n, u), u).ok);
  }
}

// Amplitudes on (x, S, R) after discarding the remaining qubits, which must
// hold the same basis value across the whole support.
std::map<std::vector<std::uint64_t>, Complex> project(const SparseState& s, const GateLevelLayout& lay,
                                                      bool& ancilla_product) {
  std::vector<Qubit> keep = lay.x.qubits();
  const auto sq = lay.s.qubits();
  keep.insert(keep.end(), sq.begin(), sq.end());
  for (const Register& r : lay.r) {
    const auto rq = r.qubits();
    keep.insert(keep.end(), rq.begin(), rq.end());
  }
  std::map<std::vector<std::uint64_t>, Complex> out;
  std::optional<std::vector<std::uint64_t>> rest;
  ancilla_product = true;
  for (const auto& [key, amp] : s.amplitudes()) {
    BasisKey k = key;
    std::vector<std::uint64_t> regs{k.read(lay.x.qubits()), k.read(lay.s.qubits())};
    for (const Register& r : lay.r) regs.push_back(k.read(r.qubits()));
    for (Qubit q : keep) k.set(q, false);
    const std::vector<std::uint64_t> w(k.words().begin(), k.words().end());
    if (!rest) rest = w;
    ancilla_product = ancilla_product && (*rest == w);
    out[regs] += amp;
  }
  return out;
}

double overlap(const std::map<std::vector<std::uint64_t>, Complex>& got,
               const std::map<std::vector<std::uint64_t>, Complex>& want) {
  Complex ip = 0;
  for (const auto& [k, a] : want) {
    if (auto it = got.find(k); it != got.end()) ip += std::conj(a) * it->second;
  }
  return std::norm(ip);
}

// The three displayed intermediate states at n = 2: U|x> in R_x, then
// sum_z alpha_z |z>_{R_x} |z>_S, then U|x> in S.
TEST(GateLevelQram, StagedIntermediateStates) {
  Rng rng(43);
  const Matrix u = random_unitary(2, rng);
  const GateLevelQram a = build_gate_level_qram(u);
  ASSERT_EQ(a.stage_layers.size(), 3U);
  const GateLevelLayout& lay = a.layout;
  for (std::uint64_t x = 0; x < 4; ++x) {
    BasisKey in(a.circuit.num_qubits());
    in.write(lay.x.qubits(), x);
    SparseState s(a.circuit.num_qubits(), in);
    std::size_t at = 0;
    for (int stage = 0; stage < 3; ++stage) {
      apply_layers(s, a.circuit, {}, at, a.stage_layers[stage]);
      at = a.stage_layers[stage];
      std::map<std::vector<std::uint64_t>, Complex> want;
      for (std::uint64_t z = 0; z < 4; ++z) {
        std::vector<std::uint64_t> regs{x, stage == 0 ? 0 : z, 0, 0, 0, 0};
        if (stage < 2) regs[2 + x] = z;
        want[regs] = u(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(x));
      }
      bool product = false;
      const auto got = project(s, lay, product);
      EXPECT_TRUE(product) << "stage " << stage + 1 << " entangles the scratch qubits";
      EXPECT_GE(overlap(got, want), 1 - 1e-9) << "x=" << x << " stage " << stage + 1;
    }
  }
}

TEST(DepthSynthesis, BitFlip) {
  const DepthSynthesis d = depth_synthesize(pauli_x());
  StateVector s(1);
  const SparseState out = run_basis(d.circuit, bind(d.qram), BasisKey(d.circuit.num_qubits()));
  BasisKey one(d.circuit.num_qubits());
  one.set(0, true);
  EXPECT_NEAR(std::norm(out.amplitude(one)), 1.0, 1e-10);
  EXPECT_EQ(d.report.queries(), 5U);
}

TEST(DepthSynthesis, TwoQubitRandomIsExactAndReportMatchesTally) {
  Rng rng(44);
  const Matrix u = random_unitary(2, rng);
  const DepthSynthesis d = depth_synthesize(u);
  EXPECT_LE(implementation_distance(d.circuit, bind(d.qram), u), 1e-8);
  EXPECT_EQ(d.report.queries(), 5U);
  EXPECT_EQ(d.report.forward_queries, 3U);
  EXPECT_EQ(depth_synthesis_report(u), d.report);
}

TEST(DepthSynthesis, ReportGrowsAndIsDeterministic) {
  std::size_t prev = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const ResourceReport r = depth_synthesis_report(n, 0);
    EXPECT_GT(r.depth, prev);
    prev = r.depth;
    const auto t = static_cast<std::size_t>(std::ceil(std::numbers::pi / 4 * std::pow(2.0, n / 2.0)));
    EXPECT_EQ(r.queries(), 1 + 2 * t);
    EXPECT_EQ(depth_synthesis_report(n, 0), r);
  }
}

TEST(OracleSynthesis, IdentityIsRepresentable) {
  for (std::size_t b : {2, 5}) {
    const OracleUnitarySynthesis s = oracle_synthesize(Matrix::Identity(4, 4), b);
    EXPECT_LE(s.distance, 1e-9);
  }
}

TEST(OracleSynthesis, RandomTwoQubit) {
  Rng rng(45);
  const Matrix u = random_unitary(2, rng);
  const OracleUnitarySynthesis s = oracle_synthesize(u, 20);
  EXPECT_LE(s.distance, 1e-3);
  EXPECT_LE(s.classical_queries, 5U * 4U);
  EXPECT_EQ(s.oracle.address_bits, 4U);
  // Independent recount: every qRAM call runs the 2n-query level loop.
  EXPECT_EQ(s.classical_queries, report(s.circuit).queries() * 2 * 2);
}

TEST(OracleSynthesis, JointOracleKeysByInputThenPrefix) {
  Rng rng(46);
  const Matrix u = random_unitary(2, rng);
  const ClassicalBitOracle o = joint_beta_oracle(u, 12);
  for (std::uint64_t x = 0; x < 4; ++x) {
    StateVector col(2);
    for (std::uint64_t z = 0; z < 4; ++z) col[z] = u(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(x));
    const ClassicalBitOracle single = beta_oracle(col, 12);
    for (const auto& [addr, value] : single.entries) EXPECT_EQ(o.lookup((x << 2) | addr), value);
  }
}

TEST(OracleSynthesis, MalformedJointOracle) {
  ClassicalBitOracle o;
  o.address_bits = 3;
  o.precision_bits = 4;
  try {
    classical_qram(o, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedOracle);
  }
}

}  // namespace
}  // namespace qsynth
