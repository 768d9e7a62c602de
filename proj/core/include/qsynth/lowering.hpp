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

#include "qsynth/circuit.hpp"

namespace qsynth {

struct LoweringCost {
  std::size_t depth = 1;
  std::size_t size = 1;
  std::size_t ancillae = 0;
};

/// Exact depth/size/ancilla count of `lower_gate(gate)`, computed in closed
/// form so arbitrarily wide gates can be costed without materializing them.
/// Oracle calls cost one layer.
LoweringCost lowering_cost(const Gate& gate);

/// QNC realization of a single gate on local qubits: qubit i < arity is the
/// gate's target i, qubits >= arity are ancillae that start and end in |0>.
///
/// Toffoli(k) uses an AND tree of three-qubit Toffolis into ancillae, each
/// three-qubit Toffoli built from five controlled-sqrt(X)/CNOT gates.
/// Fanout(k) doubles the control into k-2 ancillae, copies onto all targets
/// in one layer, then undoes the doubling. BasisReflection becomes a
/// multi-controlled Z conjugated by X on the zero positions.
CircuitIR lower_gate(const Gate& gate);

/// Replaces every Toffoli, fanout and basis reflection by its QNC
/// realization. Each input layer becomes one block whose depth is the
/// deepest lowered gate in it; ancillae are drawn fresh per layer and shared
/// across layers. One- and two-qubit gates and oracle calls pass through.
CircuitIR lower_to_qnc(const CircuitIR& circuit);

}  // namespace qsynth
