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

#include <string>
#include <vector>

#include "qsynth/types.hpp"

namespace qsynth {

enum class GateKind {
  OneQubit,
  TwoQubit,
  Toffoli,          // targets[0] is flipped iff targets[1..] are all 1
  Fanout,           // targets[0] is XORed onto targets[1..]
  BasisReflection,  // I - 2|pattern><pattern| on targets
  OracleCall,
};

enum class Direction { Forward, Backward };

inline Direction reverse(Direction d) {
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

/// One gate of a circuit. Construct through the named factories, which
/// validate arity, duplicate targets and unitarity.
struct Gate {
  GateKind kind = GateKind::OneQubit;
  std::vector<Qubit> targets;
  GateMatrix matrix;           // OneQubit / TwoQubit
  std::vector<bool> pattern;   // BasisReflection
  std::string oracle;          // OracleCall
  Direction direction = Direction::Forward;

  static Gate one_qubit(Qubit q, const GateMatrix& m);
  /// First qubit is the more significant bit of the 4x4 operator.
  static Gate two_qubit(Qubit a, Qubit b, const GateMatrix& m);
  static Gate toffoli(Qubit target, std::vector<Qubit> controls);
  static Gate cnot(Qubit control, Qubit target) { return toffoli(target, {control}); }
  static Gate fanout(Qubit control, std::vector<Qubit> targets);
  static Gate basis_reflection(std::vector<Qubit> qubits, std::vector<bool> pattern);
  static Gate oracle_call(std::string id, std::vector<Qubit> targets, Direction dir = Direction::Forward);

  std::size_t arity() const { return targets.size(); }
  Gate adjoint() const;
  /// Throws unless the gate satisfies its kind's invariants.
  void validate() const;

  friend bool operator==(const Gate& a, const Gate& b);
};

namespace gates {

GateMatrix x();
GateMatrix z();
GateMatrix h();
GateMatrix ry(double theta);
GateMatrix rz(double theta);
GateMatrix phase(double phi);
GateMatrix cnot();
GateMatrix swap();

}  // namespace gates

bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

}  // namespace qsynth
