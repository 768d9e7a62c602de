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

#include "qsynth/simulate.hpp"

#include <bit>
#include <cstdlib>
#include <memory>
#include <unordered_map>

#include <Eigen/SVD>

#include "qsynth/error.hpp"

namespace qsynth {

OracleFn matrix_binding(Matrix u) {
  auto fwd = std::make_shared<const Matrix>(std::move(u));
  auto bwd = std::make_shared<const Matrix>(fwd->adjoint());
  return [fwd, bwd](QuantumState& state, std::span<const Qubit> targets, Direction dir) {
    state.apply_matrix(targets, dir == Direction::Forward ? *fwd : *bwd);
  };
}

OracleFn circuit_binding(CircuitIR circuit, Bindings inner) {
  auto fwd = std::make_shared<const CircuitIR>(std::move(circuit));
  auto bwd = std::make_shared<const CircuitIR>(inverse(*fwd));
  auto nested = std::make_shared<const Bindings>(std::move(inner));
  return [fwd, bwd, nested](QuantumState& state, std::span<const Qubit> targets, Direction dir) {
    if (targets.size() < fwd->num_qubits()) {
      throw Error(ErrorCode::DimensionMismatch, "oracle circuit is wider than its call site");
    }
    const CircuitIR& c = dir == Direction::Forward ? *fwd : *bwd;
    apply_layers(state, c, *nested, 0, c.depth(), targets);
  };
}

SimulationLimits SimulationLimits::from_env() {
  SimulationLimits limits;
  if (const char* cap = std::getenv("QSYNTH_SIM_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v > 0 && v <= 30) limits.matrix_qubits = static_cast<std::size_t>(v);
  }
  return limits;
}

void apply_gate(QuantumState& state, const Gate& gate, const Bindings& bindings) {
  for (Qubit q : gate.targets) {
    if (q >= state.num_qubits()) {
      throw Error(ErrorCode::TargetOutOfRange,
                  "qubit " + std::to_string(q) + " on a " + std::to_string(state.num_qubits()) + "-qubit state");
    }
  }
  const std::span<const Qubit> targets(gate.targets);
  switch (gate.kind) {
    case GateKind::OneQubit:
    case GateKind::TwoQubit: {
      const Matrix m = gate.matrix;
      if (!is_unitary(m)) throw Error(ErrorCode::NonUnitaryGate, "gate matrix is not unitary");
      state.apply_matrix(targets, m);
      break;
    }
    case GateKind::Toffoli:
      state.apply_toffoli(targets[0], targets.subspan(1));
      break;
    case GateKind::Fanout:
      state.apply_fanout(targets[0], targets.subspan(1));
      break;
    case GateKind::BasisReflection:
      state.apply_basis_reflection(targets, gate.pattern);
      break;
    case GateKind::OracleCall: {
      auto it = bindings.find(gate.oracle);
      if (it == bindings.end()) throw Error(ErrorCode::UnboundOracle, "no binding for oracle '" + gate.oracle + "'");
      it->second(state, targets, gate.direction);
      break;
    }
  }
}

void apply_layers(QuantumState& state, const CircuitIR& circuit, const Bindings& bindings, std::size_t first,
                  std::size_t last, std::span<const Qubit> qubit_map) {
  last = std::min(last, circuit.depth());
  for (std::size_t i = first; i < last; ++i) {
    for (const Gate& g : circuit.layers()[i]) {
      if (qubit_map.empty()) {
        apply_gate(state, g, bindings);
        continue;
      }
      Gate mapped = g;
      for (Qubit& q : mapped.targets) {
        if (q >= qubit_map.size()) throw Error(ErrorCode::TargetOutOfRange, "gate qubit outside the qubit map");
        q = qubit_map[q];
      }
      apply_gate(state, mapped, bindings);
    }
  }
}

ResourceReport apply_circuit(QuantumState& state, const CircuitIR& circuit, const Bindings& bindings) {
  if (state.num_qubits() != circuit.num_qubits()) {
    throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(state.num_qubits()) +
                                                  " qubits, circuit has " + std::to_string(circuit.num_qubits()));
  }
  apply_layers(state, circuit, bindings, 0, circuit.depth());
  return report(circuit);
}

SimulationResult simulate(const StateVector& state, const CircuitIR& circuit, const Bindings& bindings) {
  SimulationResult out{state, {}};
  out.report = apply_circuit(out.state, circuit, bindings);
  return out;
}

SparseState run_basis(const CircuitIR& circuit, const Bindings& bindings, const BasisKey& input,
                      const SimulationLimits& limits) {
  const std::size_t m = circuit.num_qubits();
  if (m <= limits.dense_qubits) {
    StateVector dense(m, input.to_index(m));
    apply_circuit(dense, circuit, bindings);
    SparseState out(m);
    for (std::uint64_t i = 0; i < dense.size(); ++i) {
      if (std::abs(dense[i]) >= SparseState::kPruneTol) out.add(BasisKey::from_index(i, m), dense[i]);
    }
    return out;
  }
  SparseState sparse(m, input);
  apply_circuit(sparse, circuit, bindings);
  return sparse;
}

Matrix circuit_as_matrix(const CircuitIR& circuit, const Bindings& bindings, const SimulationLimits& limits) {
  const std::size_t m = circuit.num_qubits();
  if (m > limits.matrix_qubits) {
    throw Error(ErrorCode::TooManyQubits, std::to_string(m) + " qubits exceeds the matrix cap of " +
                                              std::to_string(limits.matrix_qubits));
  }
  const std::size_t dim = std::size_t{1} << m;
  Matrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector s(m, j);
    apply_circuit(s, circuit, bindings);
    for (std::size_t i = 0; i < dim; ++i) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s[i];
  }
  return out;
}

double implementation_distance(const CircuitIR& circuit, const Bindings& bindings, const Matrix& u,
                               const SimulationLimits& limits) {
  const auto dim = static_cast<std::size_t>(u.rows());
  if (dim < 2 || !std::has_single_bit(dim) || u.cols() != u.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "target must be a square 2^n matrix");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  if (n > limits.matrix_qubits) throw Error(ErrorCode::TooManyQubits, "input register exceeds the simulation cap");
  std::vector<Qubit> io;
  if (const Register* r = circuit.find_register("input")) {
    io = r->qubits();
  } else {
    for (Qubit q = 0; q < n; ++q) io.push_back(q);
  }
  if (io.size() != n || circuit.num_qubits() < n) {
    throw Error(ErrorCode::DimensionMismatch, "circuit I/O register does not match the target unitary");
  }
  const std::size_t m = circuit.num_qubits();

  std::vector<SparseState> columns;
  columns.reserve(dim);
  std::unordered_map<BasisKey, Eigen::Index, BasisKeyHash> rows;
  auto row_of = [&](const BasisKey& k) {
    auto [it, inserted] = rows.emplace(k, static_cast<Eigen::Index>(rows.size()));
    return it->second;
  };
  for (std::size_t x = 0; x < dim; ++x) {
    BasisKey in(m);
    in.write(io, x);
    columns.push_back(run_basis(circuit, bindings, in, limits));
    for (const auto& [k, a] : columns.back().amplitudes()) row_of(k);
    for (std::size_t y = 0; y < dim; ++y) {
      BasisKey k(m);
      k.write(io, y);
      row_of(k);
    }
  }
  Matrix diff = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    const auto col = static_cast<Eigen::Index>(x);
    for (const auto& [k, a] : columns[x].amplitudes()) diff(rows.at(k), col) += a;
    for (std::size_t y = 0; y < dim; ++y) {
      BasisKey k(m);
      k.write(io, y);
      diff(rows.at(k), col) -= u(static_cast<Eigen::Index>(y), col);
    }
  }
  Eigen::JacobiSVD<Matrix> svd(diff);
  return svd.singularValues()(0);
}

}  // namespace qsynth
