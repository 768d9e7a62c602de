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
#include <span>
#include <vector>

#include "qsynth/amplitude_tree.hpp"
#include "qsynth/circuit.hpp"
#include "qsynth/state.hpp"

namespace qsynth {

struct StatePrepLayout {
  std::vector<Qubit> output;
  /// tree[h] is the register of the prefix with heap index h; tree[0] unused.
  std::vector<Qubit> tree;
  std::vector<Qubit> ancillae;
};

/// Emits the constant-depth preparation of the tree's state into `output`
/// (n qubits, all |0>). Every other qubit comes from `alloc` and is
/// returned to |0>. With `staged`, barriers separate the three stages so
/// the layer count does not depend on n.
StatePrepLayout emit_state_preparation(CircuitSink& sink, const AmplitudeTree& tree,
                                       std::span<const Qubit> output, QubitAllocator& alloc,
                                       bool staged = false);

/// Output register first, then tree registers, then ancillae.
CircuitIR build_qacf0_state_circuit(const StateVector& psi);
CircuitIR build_qnc_state_circuit(const StateVector& psi);

struct CompactSynthesis {
  StateVector output;
  /// Probability that some tree register is left nonzero.
  double residue = 0;
};

/// Runs the construction on the tree registers and output only, with the
/// indexing function applied as a basis permutation.
CompactSynthesis compact_state_synthesis(const AmplitudeTree& tree);

}  // namespace qsynth
