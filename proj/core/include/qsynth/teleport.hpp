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
#include <string>
#include <vector>

#include "qsynth/linalg.hpp"
#include "qsynth/state.hpp"

namespace qsynth {

/// Per qubit two bits "xz": the correction is X^x Z^z on that qubit.
struct PauliLabel {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  bool is_identity() const { return x == 0 && z == 0; }
  std::string str(std::size_t n) const;
  Matrix matrix(std::size_t n) const;
};

struct TeleportTrace {
  std::size_t rounds = 0;
  std::vector<PauliLabel> corrections;
  StateVector final_state;
  double fidelity = 0;
};

/// Default cap is 64 * 4^n rounds.
std::size_t default_round_cap(std::size_t n);

/// Repeatedly teleports through (I (x) U_k)|Phi>; U_{k+1} = U_k P U_k^dagger P.
TeleportTrace teleport_synthesize(const Matrix& u, const StateVector& psi, std::uint64_t seed,
                                  std::size_t round_cap = 0);

}  // namespace qsynth
