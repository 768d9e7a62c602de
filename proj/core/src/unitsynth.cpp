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

#include "qsynth/unitsynth.hpp"

#include <bit>

#include "qsynth/amplitude_tree.hpp"
#include "qsynth/error.hpp"
#include "qsynth/linalg.hpp"
#include "qsynth/lowering.hpp"

namespace qsynth {

namespace {

std::size_t qubit_count(const Matrix& u) {
  const auto dim = static_cast<std::size_t>(u.rows());
  if (dim < 2 || u.cols() != u.rows() || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::DimensionMismatch, "unitary must be square with power-of-two dimension");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

StateVector column(const Matrix& u, std::size_t x) {
  std::vector<Complex> amps(static_cast<std::size_t>(u.rows()));
  for (std::size_t z = 0; z < amps.size(); ++z) amps[z] = u(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(x));
  return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace

DepthSynthesis depth_synthesize(const Matrix& u) {
  const std::size_t n = qubit_count(u);
  const GateLevelQram g = build_gate_level_qram(u);
  CircuitIR low = lower_to_qnc(g.circuit);
  const ResourceReport a_cost = report(low);
  DepthSynthesis out{implement_via_qram(n, low.num_qubits()), circuit_qram(std::move(low), n, u), {}};
  out.report = lowered_report(out.circuit, {{kQramOracle, a_cost}});
  return out;
}

ResourceReport depth_synthesis_report(const Matrix& u) {
  const std::size_t n = qubit_count(u);
  ResourceTally a;
  const GateLevelLayout lay = emit_gate_level_qram(a, u);
  a.set_num_qubits(lay.num_qubits);
  a.set_io_width(n);
  const ResourceReport a_cost = a.lowered();
  ResourceTally whole({{kQramOracle, a_cost}});
  emit_via_qram(whole, n, a_cost.num_qubits);
  whole.set_num_qubits(a_cost.num_qubits + 1);
  whole.set_io_width(n);
  return whole.lowered();
}

ResourceReport depth_synthesis_report(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return depth_synthesis_report(random_unitary(n, rng));
}

ClassicalBitOracle joint_beta_oracle(const Matrix& u, std::size_t precision_bits) {
  if (!is_unitary(u)) throw Error(ErrorCode::NonUnitaryInput, "oracle synthesis needs a unitary");
  const std::size_t n = qubit_count(u);
  ClassicalBitOracle joint;
  joint.address_bits = 2 * n;
  joint.precision_bits = precision_bits;
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    const ClassicalBitOracle part = beta_oracle(column(u, x), precision_bits);
    for (const auto& [h, v] : part.entries) joint.entries[(std::uint64_t{x} << n) | h] = v;
  }
  return joint;
}

QramOracle classical_qram(const ClassicalBitOracle& oracle, std::size_t n) {
  if (oracle.address_bits != 2 * n) throw Error(ErrorCode::MalformedOracle, "joint oracle needs 2n address bits");
  QramOracle a;
  a.n = n;
  a.m = 2 * n + oracle.value_width();
  a.kind = "classical";
  auto o = std::make_shared<const ClassicalBitOracle>(oracle);
  const std::size_t m = a.m;
  a.action = [o, n, m](QuantumState& state, std::span<const Qubit> t, Direction dir) {
    if (t.size() < m) throw Error(ErrorCode::DimensionMismatch, "qRAM call site too narrow");
    run_oracle_levels(state, *o, t.subspan(0, n), t.subspan(n, n), t.subspan(2 * n, m - 2 * n), dir);
  };
  return a;
}

OracleUnitarySynthesis oracle_synthesize(const Matrix& u, std::size_t precision_bits) {
  const std::size_t n = qubit_count(u);
  OracleUnitarySynthesis out;
  out.oracle = joint_beta_oracle(u, precision_bits);
  out.qram = classical_qram(out.oracle, n);
  // The copy inside the qRAM shares the counter with out.oracle.
  out.circuit = implement_via_qram(out.qram, false);
  const Bindings bindings{{kQramOracle, out.qram.binding()}};
  const std::size_t before = out.oracle.counter->total();
  run_basis(out.circuit, bindings, BasisKey(out.circuit.num_qubits()));
  out.classical_queries = out.oracle.counter->total() - before;
  out.distance = implementation_distance(out.circuit, bindings, u);
  return out;
}

}  // namespace qsynth
