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

#include "qsynth/gate.hpp"

#include <algorithm>
#include <cmath>

#include "qsynth/error.hpp"

namespace qsynth {

namespace {

void require_distinct(const std::vector<Qubit>& qubits) {
  std::vector<Qubit> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "gate targets contain a duplicate qubit");
  }
}

}  // namespace

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex v = m.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  const Matrix prod = m.adjoint() * m;
  return (prod - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

Gate Gate::one_qubit(Qubit q, const GateMatrix& m) {
  Gate g;
  g.kind = GateKind::OneQubit;
  g.targets = {q};
  g.matrix = m;
  g.validate();
  return g;
}

Gate Gate::two_qubit(Qubit a, Qubit b, const GateMatrix& m) {
  Gate g;
  g.kind = GateKind::TwoQubit;
  g.targets = {a, b};
  g.matrix = m;
  g.validate();
  return g;
}

Gate Gate::toffoli(Qubit target, std::vector<Qubit> controls) {
  Gate g;
  g.kind = GateKind::Toffoli;
  g.targets.reserve(controls.size() + 1);
  g.targets.push_back(target);
  g.targets.insert(g.targets.end(), controls.begin(), controls.end());
  g.validate();
  return g;
}

Gate Gate::fanout(Qubit control, std::vector<Qubit> targets) {
  Gate g;
  g.kind = GateKind::Fanout;
  g.targets.reserve(targets.size() + 1);
  g.targets.push_back(control);
  g.targets.insert(g.targets.end(), targets.begin(), targets.end());
  g.validate();
  return g;
}

Gate Gate::basis_reflection(std::vector<Qubit> qubits, std::vector<bool> pattern) {
  Gate g;
  g.kind = GateKind::BasisReflection;
  g.targets = std::move(qubits);
  g.pattern = std::move(pattern);
  g.validate();
  return g;
}

Gate Gate::oracle_call(std::string id, std::vector<Qubit> targets, Direction dir) {
  Gate g;
  g.kind = GateKind::OracleCall;
  g.targets = std::move(targets);
  g.oracle = std::move(id);
  g.direction = dir;
  g.validate();
  return g;
}

void Gate::validate() const {
  switch (kind) {
    case GateKind::OneQubit:
    case GateKind::TwoQubit: {
      const std::size_t k = kind == GateKind::OneQubit ? 1 : 2;
      if (targets.size() != k) throw Error(ErrorCode::InvalidArgument, "matrix gate has wrong target count");
      if (matrix.rows() != (1 << k) || matrix.cols() != (1 << k)) {
        throw Error(ErrorCode::DimensionMismatch, "gate matrix has wrong shape");
      }
      if (!is_unitary(Matrix(matrix))) throw Error(ErrorCode::NonUnitaryGate, "gate matrix is not unitary");
      break;
    }
    case GateKind::Toffoli:
    case GateKind::Fanout:
      if (targets.size() < 2) throw Error(ErrorCode::InvalidArgument, "Toffoli/fanout arity must be >= 2");
      break;
    case GateKind::BasisReflection:
      if (targets.empty() || pattern.size() != targets.size()) {
        throw Error(ErrorCode::InvalidArgument, "basis reflection pattern does not match its qubits");
      }
      break;
    case GateKind::OracleCall:
      if (oracle.empty() || targets.empty()) throw Error(ErrorCode::InvalidArgument, "oracle call needs an id and targets");
      break;
  }
  require_distinct(targets);
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::OneQubit:
    case GateKind::TwoQubit:
      g.matrix = matrix.adjoint();
      break;
    case GateKind::OracleCall:
      g.direction = reverse(direction);
      break;
    default:
      break;  // self-inverse
  }
  return g;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.targets != b.targets) return false;
  switch (a.kind) {
    case GateKind::OneQubit:
    case GateKind::TwoQubit:
      return a.matrix == b.matrix;
    case GateKind::BasisReflection:
      return a.pattern == b.pattern;
    case GateKind::OracleCall:
      return a.oracle == b.oracle && a.direction == b.direction;
    default:
      return true;
  }
}

namespace gates {

GateMatrix x() {
  GateMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

GateMatrix z() {
  GateMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

GateMatrix h() {
  const double r = 1.0 / std::sqrt(2.0);
  GateMatrix m(2, 2);
  m << r, r, r, -r;
  return m;
}

GateMatrix ry(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  GateMatrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

GateMatrix rz(double theta) {
  GateMatrix m(2, 2);
  m << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2);
  return m;
}

GateMatrix phase(double phi) {
  GateMatrix m(2, 2);
  m << 1, 0, 0, std::polar(1.0, phi);
  return m;
}

GateMatrix cnot() {
  GateMatrix m = GateMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

GateMatrix swap() {
  GateMatrix m = GateMatrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

}  // namespace gates

}  // namespace qsynth
