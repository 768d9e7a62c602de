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

#include <cstdint>
#include <random>

#include "qsynth/circuit.hpp"
#include "qsynth/state.hpp"
#include "qsynth/types.hpp"

namespace qsynth {

using Rng = std::mt19937_64;

/// Haar-distributed unitary on n qubits (QR of a complex Ginibre matrix).
Matrix random_unitary(std::size_t num_qubits, Rng& rng);
StateVector random_state(std::size_t num_qubits, Rng& rng);

/// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct ZyzAngles {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
  double delta = 0;
};

ZyzAngles zyz_decompose(const GateMatrix& u);
GateMatrix zyz_compose(const ZyzAngles& a);

/// Controlled-U from one-qubit gates and two CNOTs; depth 5.
/// CNOTs are emitted as two-control Toffolis unless `qnc` is set.
void emit_controlled_one_qubit(CircuitSink& sink, Qubit control, Qubit target, const GateMatrix& u,
                               bool qnc = false);

/// Kronecker product, `a` on the more significant qubits.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace qsynth
