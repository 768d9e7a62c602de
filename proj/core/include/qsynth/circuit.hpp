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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsynth/gate.hpp"

namespace qsynth {

enum class GateClass { QNC, QACf0, Oracle };

std::string to_string(GateClass c);
GateClass gate_class_from_string(const std::string& s);

struct Register {
  Qubit start = 0;
  std::size_t length = 0;

  std::vector<Qubit> qubits() const;
  Qubit operator[](std::size_t i) const { return start + static_cast<Qubit>(i); }
  friend bool operator==(const Register&, const Register&) = default;
};

/// Hands out fresh qubit indices; builders allocate registers and ancillae
/// from one shared allocator so nested constructions never collide.
class QubitAllocator {
 public:
  explicit QubitAllocator(Qubit first = 0) : next_(first) {}
  Qubit take() { return next_++; }
  std::vector<Qubit> take(std::size_t count);
  Register take_register(std::size_t count);
  Qubit count() const { return next_; }

 private:
  Qubit next_;
};

/// Destination for emitted gates. Circuits append with as-soon-as-possible
/// layering; `barrier` forbids later gates from moving above the current
/// depth.
class CircuitSink {
 public:
  virtual ~CircuitSink() = default;
  virtual void append(Gate gate) = 0;
  virtual void barrier() = 0;
};

/// Layered circuit: each layer holds gates on pairwise-disjoint qubits.
class CircuitIR final : public CircuitSink {
 public:
  CircuitIR() = default;
  CircuitIR(std::size_t num_qubits, GateClass gate_class);

  /// Places the gate in the earliest layer after every earlier gate that
  /// shares a qubit with it. Grows num_qubits if needed.
  void append(Gate gate) override;
  void barrier() override;
  /// Appends a whole layer after the current last layer.
  void add_layer(std::vector<Gate> layer);
  /// Appends every gate of `other`, mapping its qubit i to `qubit_map[i]`.
  void append_circuit(const CircuitIR& other, std::span<const Qubit> qubit_map);

  std::size_t num_qubits() const { return num_qubits_; }
  void set_num_qubits(std::size_t n);
  GateClass gate_class() const { return gate_class_; }
  void set_gate_class(GateClass c) { gate_class_ = c; }

  const std::vector<std::vector<Gate>>& layers() const { return layers_; }
  std::size_t depth() const { return layers_.size(); }
  std::size_t size() const;

  const std::map<std::string, Register>& registers() const { return registers_; }
  void set_register(const std::string& name, Register reg) { registers_[name] = reg; }
  const Register* find_register(const std::string& name) const;

  /// Throws if any invariant (disjoint layers, class membership, qubit
  /// range, gate validity) is violated.
  void validate() const;

  friend bool operator==(const CircuitIR&, const CircuitIR&);

 private:
  void check_class(const Gate& gate) const;

  std::size_t num_qubits_ = 0;
  GateClass gate_class_ = GateClass::QNC;
  std::vector<std::vector<Gate>> layers_;
  std::map<std::string, Register> registers_;
  std::vector<std::size_t> frontier_;
  std::size_t floor_ = 0;
};

/// Layers reversed, each gate replaced by its adjoint, oracle directions
/// flipped.
CircuitIR inverse(const CircuitIR& circuit);

/// Replaces each OracleCall with the given id by `replacement`. Replacement
/// qubit i maps to the call's target i for i < arity and to
/// `extra[i - arity]` beyond that. Backward calls run the replacement
/// inverted.
CircuitIR substitute_oracle(const CircuitIR& circuit, const std::string& id, const CircuitIR& replacement,
                            std::span<const Qubit> extra = {});

}  // namespace qsynth
