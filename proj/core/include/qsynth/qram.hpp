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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsynth/circuit.hpp"
#include "qsynth/grover.hpp"
#include "qsynth/linalg.hpp"
#include "qsynth/simulate.hpp"

namespace qsynth {

inline constexpr const char* kQramOracle = "qram";

/// An m-qubit unitary A with A|x, 0^{m-n}> = |x> (x) U|x> (x) |0^{m-2n}>.
struct QramOracle {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string kind;
  /// Raw action on m target qubits; does not count queries.
  OracleFn action;
  std::shared_ptr<QueryCounter> counter = std::make_shared<QueryCounter>();
  /// The unitary A claims to load, when known.
  std::optional<Matrix> target;
  /// Set for circuit-backed oracles.
  std::optional<CircuitIR> circuit;

  /// Counting wrapper around `action`.
  OracleFn binding() const;
};

QramOracle functional_qram(const Matrix& u);
/// `sigma[x]` is the image of x; the oracle XORs sigma(x) into the second register.
QramOracle permutation_qram(const std::vector<std::uint64_t>& sigma);
QramOracle circuit_qram(CircuitIR circuit, std::size_t n, std::optional<Matrix> target = std::nullopt,
                        Bindings inner = {});

/// Full 2^m x 2^m matrix of the oracle's action (small m only).
Matrix qram_matrix(const QramOracle& a, const SimulationLimits& limits = SimulationLimits::from_env());

struct QramCheck {
  bool ok = false;
  double worst_deviation = 0;
  std::size_t inputs_checked = 0;
};

/// Checks the loading property for every x (n <= 8) or 256 sampled x.
QramCheck verify_qram(const QramOracle& a, const Matrix& u, double tol = 1e-9);

/// (A (x) I) (I_n (x) (I - 2|0^{m-n},1><0^{m-n},1|)) (A^dagger (x) I) on m+1
/// qubits, flag last.
CircuitIR reflection_from_qram(std::size_t n, std::size_t m);
CircuitIR reflection_from_qram(const QramOracle& a);

/// Layout of the circuit that implements U from its qRAM: x and output
/// share qubits [0, n), the Grover flag sits at n, the rest of A's register
/// follows. Total m + 1 qubits.
struct ViaQramLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  Qubit flag() const { return static_cast<Qubit>(n); }
  /// Global position of A's local qubit i.
  Qubit a_qubit(std::size_t i) const { return static_cast<Qubit>(i < n ? i : i + 1); }
  std::vector<Qubit> a_qubits() const;
  std::size_t width() const { return m + 1; }
};

/// Streams the construction into `sink`; A appears as "qram" oracle calls.
void emit_via_qram(CircuitSink& sink, std::size_t n, std::size_t m);

CircuitIR implement_via_qram(std::size_t n, std::size_t m);
/// Checks the loading property first when the oracle knows its target.
CircuitIR implement_via_qram(const QramOracle& a, bool precheck = true);

}  // namespace qsynth
