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
#include <vector>

#include "qsynth/state.hpp"
#include "qsynth/types.hpp"

namespace qsynth {

/// Conditional amplitudes beta_x for every nonempty prefix x, stored by
/// heap index (node 1 is the empty prefix and holds no value).
struct AmplitudeTree {
  std::size_t n = 0;
  std::vector<Complex> beta;

  Complex at(const BitString& x) const { return beta[x.heap_index()]; }
  /// W with W|0> = beta_{x0}|0> + beta_{x1}|1>, for a prefix of length < n.
  GateMatrix child_gate(std::size_t heap) const;
  /// prod_i beta_{x<=i}.
  Complex amplitude(std::uint64_t x) const;
  StateVector reconstruct() const;
};

/// Zero-mass prefixes get beta_{x0} = 1, beta_{x1} = 0.
AmplitudeTree amplitude_tree(const StateVector& psi);

/// Unitary whose first column is (b0, b1); b0, b1 must have unit joint norm.
GateMatrix preparation_gate(Complex b0, Complex b1);

}  // namespace qsynth
