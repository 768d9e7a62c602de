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

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "qsynth/circuit.hpp"
#include "qsynth/resources.hpp"
#include "qsynth/state.hpp"

namespace qsynth {

/// Realizes an oracle placeholder on `targets` of a state.
using OracleFn = std::function<void(QuantumState&, std::span<const Qubit> targets, Direction)>;
using Bindings = std::map<std::string, OracleFn>;

/// Forward applies `u`, backward applies its adjoint.
OracleFn matrix_binding(Matrix u);
/// Runs `circuit` with its qubit i on target i (and the inverse circuit for
/// backward calls). The circuit may not use more qubits than the call has
/// targets.
OracleFn circuit_binding(CircuitIR circuit, Bindings inner = {});

struct SimulationLimits {
  /// Largest circuit for which a full unitary matrix is built, and the
  /// largest input register accepted by implementation_distance.
  std::size_t matrix_qubits = 14;
  /// Circuits up to this width run on the dense backend; wider ones on the
  /// sparse backend.
  std::size_t dense_qubits = 20;

  /// Defaults, with QSYNTH_SIM_CAP overriding matrix_qubits.
  static SimulationLimits from_env();
};

void apply_gate(QuantumState& state, const Gate& gate, const Bindings& bindings = {});

/// Applies layers [first, last) of `circuit`. Qubit i of the circuit acts on
/// `qubit_map[i]` when a map is given.
void apply_layers(QuantumState& state, const CircuitIR& circuit, const Bindings& bindings, std::size_t first,
                  std::size_t last, std::span<const Qubit> qubit_map = {});

/// Applies every layer in order; the state width must match the circuit.
ResourceReport apply_circuit(QuantumState& state, const CircuitIR& circuit, const Bindings& bindings = {});

struct SimulationResult {
  StateVector state;
  ResourceReport report;
};
SimulationResult simulate(const StateVector& state, const CircuitIR& circuit, const Bindings& bindings = {});

/// Runs the circuit on a basis state, picking the dense or sparse backend
/// by width, and returns the output as a sparse state.
SparseState run_basis(const CircuitIR& circuit, const Bindings& bindings, const BasisKey& input,
                      const SimulationLimits& limits = SimulationLimits::from_env());

/// Column j is the circuit applied to basis state j.
Matrix circuit_as_matrix(const CircuitIR& circuit, const Bindings& bindings = {},
                         const SimulationLimits& limits = SimulationLimits::from_env());

/// Operator 2-norm of C(I_n ⊗ |0..0>) - U ⊗ |0..0>, where the n-qubit I/O
/// register is the circuit's "input" register (qubits 0..n-1 if absent).
double implementation_distance(const CircuitIR& circuit, const Bindings& bindings, const Matrix& u,
                               const SimulationLimits& limits = SimulationLimits::from_env());

}  // namespace qsynth
