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

#include "qsynth/linalg.hpp"

#include <cmath>

#include <Eigen/QR>

#include "qsynth/error.hpp"

namespace qsynth {

Matrix random_unitary(std::size_t num_qubits, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  std::normal_distribution<double> normal;
  Matrix z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  // Fix column phases so the distribution is Haar.
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0 ? d / mag : Complex(1);
  }
  return q;
}

StateVector random_state(std::size_t num_qubits, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  double norm = 0;
  for (auto& a : amps) {
    a = Complex(normal(rng), normal(rng));
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (auto& a : amps) a /= norm;
  return StateVector::from_amplitudes(std::move(amps));
}

ZyzAngles zyz_decompose(const GateMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "zyz needs a 2x2 matrix");
  ZyzAngles a;
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  a.alpha = std::arg(det) / 2;
  const Complex ph = std::polar(1.0, -a.alpha);
  const Complex v00 = ph * u(0, 0);
  const Complex v10 = ph * u(1, 0);
  const Complex v11 = ph * u(1, 1);
  const double c = std::abs(v00);
  const double s = std::abs(v10);
  a.gamma = 2 * std::atan2(s, c);
  const double sum = c > 1e-12 ? 2 * std::arg(v11) : 0.0;
  const double diff = s > 1e-12 ? 2 * std::arg(v10) : 0.0;
  a.beta = (sum + diff) / 2;
  a.delta = (sum - diff) / 2;
  return a;
}

GateMatrix zyz_compose(const ZyzAngles& a) {
  GateMatrix m = gates::rz(a.beta) * gates::ry(a.gamma) * gates::rz(a.delta);
  return m * std::polar(1.0, a.alpha);
}

void emit_controlled_one_qubit(CircuitSink& sink, Qubit control, Qubit target, const GateMatrix& u, bool qnc) {
  const ZyzAngles z = zyz_decompose(u);
  const GateMatrix a = gates::rz(z.beta) * gates::ry(z.gamma / 2);
  const GateMatrix b = gates::ry(-z.gamma / 2) * gates::rz(-(z.delta + z.beta) / 2);
  const GateMatrix c = gates::rz((z.delta - z.beta) / 2);
  auto cx = [&] {
    sink.append(qnc ? Gate::two_qubit(control, target, gates::cnot()) : Gate::cnot(control, target));
  };
  sink.append(Gate::one_qubit(control, gates::phase(z.alpha)));
  sink.append(Gate::one_qubit(target, c));
  cx();
  sink.append(Gate::one_qubit(target, b));
  cx();
  sink.append(Gate::one_qubit(target, a));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qsynth
