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
#include <string>

#include "qsynth/circuit.hpp"
#include "qsynth/simulate.hpp"
#include "qsynth/types.hpp"

namespace qsynth {

inline constexpr const char* kMarkedOracle = "marked";

struct GroverParams {
  std::size_t n = 0;
  std::size_t t = 0;
  double theta = 0;
  double p = 0;
};

/// t = ceil(pi/4 * 2^{n/2}), theta = (pi/2)/(2t+1), p = 2^n sin^2(theta).
GroverParams grover_params(std::size_t n);

/// Query counts shared by every copy of an oracle and its bindings.
struct QueryCounter {
  std::size_t forward = 0;
  std::size_t backward = 0;
  std::size_t total() const { return forward + backward; }
};

/// I - 2|x,1><x,1| on n+1 qubits.
class MarkedReflectionOracle {
 public:
  MarkedReflectionOracle(std::size_t n, BitString marked);

  std::size_t n() const { return n_; }
  const BitString& marked() const { return marked_; }
  std::size_t query_count() const { return counter_->total(); }
  const QueryCounter& counter() const { return *counter_; }

  OracleFn binding() const;
  Matrix matrix() const;

 private:
  std::size_t n_;
  BitString marked_;
  std::shared_ptr<QueryCounter> counter_;
};

/// Prepares |x>|0> from |0^{n+1}> given the "marked" oracle; n+1 qubits,
/// flag last.
CircuitIR build_exact_grover(std::size_t n);
CircuitIR build_reverse_grover(std::size_t n);

/// The diffusion 2|psi0><psi0| - I alone, as used inside the search.
CircuitIR build_diffusion(std::size_t n);

struct GroverRun {
  BitString found;
  std::size_t queries = 0;
  double fidelity = 0;
};

GroverRun run_exact_grover(std::size_t n, MarkedReflectionOracle& oracle);

}  // namespace qsynth
