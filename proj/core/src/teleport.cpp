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

#include "qsynth/teleport.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/SVD>

#include "qsynth/error.hpp"
#include "qsynth/gate.hpp"

namespace qsynth {

std::string PauliLabel::str(std::size_t n) const {
  std::string s;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t shift = n - 1 - j;
    s.push_back((x >> shift) & 1U ? '1' : '0');
    s.push_back((z >> shift) & 1U ? '1' : '0');
  }
  return s;
}

Matrix PauliLabel::matrix(std::size_t n) const {
  Matrix m = Matrix::Identity(1, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t shift = n - 1 - j;
    Matrix p = Matrix::Identity(2, 2);
    if ((x >> shift) & 1U) p = p * Matrix(gates::x());
    if ((z >> shift) & 1U) p = p * Matrix(gates::z());
    m = kron(m, p);
  }
  return m;
}

namespace {

// The recursion doubles any error in U_k each round, so it is projected back
// onto the unitaries (polar factor) every time.
Matrix nearest_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

std::size_t default_round_cap(std::size_t n) { return std::size_t{64} << (2 * n); }

TeleportTrace teleport_synthesize(const Matrix& u, const StateVector& psi, std::uint64_t seed,
                                  std::size_t round_cap) {
  const auto dim = static_cast<std::size_t>(u.rows());
  if (dim < 2 || u.cols() != u.rows() || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::DimensionMismatch, "unitary must be square with power-of-two dimension");
  }
  if (!is_unitary(u)) throw Error(ErrorCode::NonUnitaryInput, "teleportation needs a unitary");
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  if (psi.num_qubits() != n) throw Error(ErrorCode::DimensionMismatch, "input state width differs from U");
  if (!psi.is_normalized()) throw Error(ErrorCode::UnnormalizedState, "input state is not normalized");
  if (3 * n > 24) throw Error(ErrorCode::TooManyQubits, "teleportation simulates 3n qubits; n too large");
  if (round_cap == 0) round_cap = default_round_cap(n);

  // Registers: A = [0, n) holds the input, B1 = [n, 2n) Alice's half, B2 = [2n, 3n) Bob's.
  std::vector<Qubit> a(n), b1(n), b2(n);
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = static_cast<Qubit>(j);
    b1[j] = static_cast<Qubit>(n + j);
    b2[j] = static_cast<Qubit>(2 * n + j);
  }
  const double inv = 1.0 / std::sqrt(static_cast<double>(dim));

  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TeleportTrace trace;
  Matrix target = u;
  std::vector<Complex> phi = psi.amplitudes();
  while (true) {
    if (trace.rounds == round_cap) {
      throw Error(ErrorCode::RoundCapExceeded, "no identity correction within " + std::to_string(round_cap) + " rounds");
    }
    ++trace.rounds;
    // |phi>_A (x) (I (x) U_k)|Phi>_{B1 B2}.
    std::vector<Complex> amps(dim * dim * dim, Complex{});
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t r = 0; r < dim; ++r) {
          amps[(i * dim + k) * dim + r] =
              phi[i] * inv * target(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k));
        }
      }
    }
    StateVector st = StateVector::from_amplitudes(std::move(amps));
    for (std::size_t j = 0; j < n; ++j) st.apply_toffoli(b1[j], std::vector<Qubit>{a[j]});
    for (std::size_t j = 0; j < n; ++j) st.apply_matrix(std::vector<Qubit>{a[j]}, Matrix(gates::h()));

    // Sample (z, x) = (A, B1) from the exact joint distribution.
    std::vector<double> prob(dim * dim, 0.0);
    for (std::size_t idx = 0; idx < st.size(); ++idx) prob[idx / dim] += std::norm(st[idx]);
    double draw = unit(rng);
    std::size_t outcome = prob.size() - 1;
    for (std::size_t o = 0; o < prob.size(); ++o) {
      if (draw < prob[o]) {
        outcome = o;
        break;
      }
      draw -= prob[o];
    }
    const PauliLabel p{outcome % dim, outcome / dim};
    trace.corrections.push_back(p);

    std::vector<Complex> bob(dim);
    double mass = 0;
    for (std::size_t r = 0; r < dim; ++r) {
      bob[r] = st[outcome * dim + r];
      mass += std::norm(bob[r]);
    }
    const double norm = std::sqrt(mass);
    Vector bv(static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) bv(static_cast<Eigen::Index>(r)) = bob[r] / norm;
    // Bob now holds U_k P phi; applying P gives P U_k P phi.
    const Matrix pm = p.matrix(n);
    bv = pm * bv;
    for (std::size_t r = 0; r < dim; ++r) phi[r] = bv(static_cast<Eigen::Index>(r));
    if (p.is_identity()) break;
    target = nearest_unitary(target * pm * target.adjoint() * pm);
  }
  trace.final_state = StateVector::from_amplitudes(phi);
  Vector want = u * Eigen::Map<const Vector>(psi.amplitudes().data(), static_cast<Eigen::Index>(dim));
  Complex overlap{};
  for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(want(static_cast<Eigen::Index>(r))) * phi[r];
  trace.fidelity = std::norm(overlap);
  return trace;
}

}  // namespace qsynth
