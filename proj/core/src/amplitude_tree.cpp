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

#include "qsynth/amplitude_tree.hpp"

#include <cmath>

#include "qsynth/error.hpp"

namespace qsynth {

GateMatrix preparation_gate(Complex b0, Complex b1) {
  GateMatrix w(2, 2);
  w << b0, -std::conj(b1), b1, std::conj(b0);
  return w;
}

GateMatrix AmplitudeTree::child_gate(std::size_t heap) const {
  return preparation_gate(beta[2 * heap], beta[2 * heap + 1]);
}

Complex AmplitudeTree::amplitude(std::uint64_t x) const {
  Complex a = 1;
  std::size_t h = 1;
  for (std::size_t i = 0; i < n; ++i) {
    h = 2 * h + ((x >> (n - 1 - i)) & 1U);
    a *= beta[h];
  }
  return a;
}

StateVector AmplitudeTree::reconstruct() const {
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = amplitude(x);
  return StateVector::from_amplitudes(std::move(amps));
}

AmplitudeTree amplitude_tree(const StateVector& psi) {
  if (!psi.is_normalized()) throw Error(ErrorCode::UnnormalizedState, "state norm differs from 1");
  const std::size_t n = psi.num_qubits();
  const std::size_t leaves = std::size_t{1} << n;
  // mass[h] = probability of the prefix at heap node h.
  std::vector<double> mass(2 * leaves, 0.0);
  for (std::size_t x = 0; x < leaves; ++x) mass[leaves + x] = std::norm(psi[x]);
  for (std::size_t h = leaves - 1; h >= 1; --h) mass[h] = mass[2 * h] + mass[2 * h + 1];

  AmplitudeTree tree;
  tree.n = n;
  tree.beta.assign(2 * leaves, Complex(0));
  for (std::size_t h = 1; h < leaves; ++h) {
    const std::size_t c0 = 2 * h;
    const std::size_t c1 = c0 + 1;
    if (mass[h] <= 0) {
      tree.beta[c0] = 1;
      continue;
    }
    const double root = std::sqrt(mass[h]);
    if (c0 >= leaves) {
      tree.beta[c0] = psi[c0 - leaves] / root;
      tree.beta[c1] = psi[c1 - leaves] / root;
    } else {
      tree.beta[c0] = std::sqrt(mass[c0]) / root;
      tree.beta[c1] = std::sqrt(mass[c1]) / root;
    }
    // Clean rounding so each pair has unit norm to machine precision.
    const double norm = std::sqrt(std::norm(tree.beta[c0]) + std::norm(tree.beta[c1]));
    tree.beta[c0] /= norm;
    tree.beta[c1] /= norm;
  }
  return tree;
}

}  // namespace qsynth
