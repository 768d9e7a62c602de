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
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qsynth/circuit.hpp"
#include "qsynth/bit_oracle.hpp"
#include "qsynth/qram.hpp"
#include "qsynth/resources.hpp"

namespace qsynth {

/// Buffers a gate stream, then replays it controlled on a bit b. Gates
/// sharing an ASAP layer of the buffered stream get distinct copies of b so
/// parallelism is kept; fanouts borrow one scratch qubit each.
class ControlledSink final : public CircuitSink {
 public:
  void append(Gate gate) override { inner_.append(std::move(gate)); }
  void barrier() override { inner_.barrier(); }

  std::size_t controls_needed() const;
  std::size_t scratch_needed() const;
  /// Emits the controlled stream, layer by layer.
  void flush(CircuitSink& out, std::span<const Qubit> controls, std::span<const Qubit> scratch) const;

 private:
  CircuitIR inner_{0, GateClass::QACf0};
};

struct GateLevelLayout {
  std::size_t n = 0;
  Register x;
  Register s;
  std::vector<Register> r;  // R_y, y = 0 .. 2^n - 1
  std::size_t num_qubits = 0;
};

/// Streams the qRAM construction: equality bits, controlled preparation of
/// U|y> in each R_y, OR into S, controlled XOR of S into R_y, cleanup.
/// `on_stage` fires at the barrier after each of the three steps.
GateLevelLayout emit_gate_level_qram(CircuitSink& sink, const Matrix& u,
                                     const std::function<void(int)>& on_stage = {});

struct GateLevelQram {
  CircuitIR circuit;
  GateLevelLayout layout;
  /// Layer count at the end of steps 1, 2 and 3.
  std::vector<std::size_t> stage_layers;
};

GateLevelQram build_gate_level_qram(const Matrix& u);

struct DepthSynthesis {
  /// Implements U through "qram" calls.
  CircuitIR circuit;
  /// The lowered gate-level qRAM those calls stand for.
  QramOracle qram;
  /// Resources with every call expanded.
  ResourceReport report;
};

DepthSynthesis depth_synthesize(const Matrix& u);

/// Resource report of depth_synthesize for a Haar-random n-qubit unitary,
/// streamed without building circuits.
ResourceReport depth_synthesis_report(std::size_t n, std::uint64_t seed = 0);
ResourceReport depth_synthesis_report(const Matrix& u);

struct OracleUnitarySynthesis {
  ClassicalBitOracle oracle;
  QramOracle qram;
  CircuitIR circuit;
  double distance = 0;
  /// Classical-oracle queries executed by one run of the circuit.
  std::size_t classical_queries = 0;
};

/// The joint oracle is keyed by (x << n) | heap(prefix).
ClassicalBitOracle joint_beta_oracle(const Matrix& u, std::size_t precision_bits);
QramOracle classical_qram(const ClassicalBitOracle& oracle, std::size_t n);
OracleUnitarySynthesis oracle_synthesize(const Matrix& u, std::size_t precision_bits);

}  // namespace qsynth
