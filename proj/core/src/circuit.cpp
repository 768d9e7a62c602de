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

#include "qsynth/circuit.hpp"

#include <algorithm>
#include <numeric>

#include "qsynth/error.hpp"

namespace qsynth {

std::string to_string(GateClass c) {
  switch (c) {
    case GateClass::QNC: return "QNC";
    case GateClass::QACf0: return "QACf0";
    case GateClass::Oracle: return "ORACLE";
  }
  return "?";
}

GateClass gate_class_from_string(const std::string& s) {
  if (s == "QNC") return GateClass::QNC;
  if (s == "QACf0") return GateClass::QACf0;
  if (s == "ORACLE") return GateClass::Oracle;
  throw Error(ErrorCode::ParseError, "gate_class: unknown value '" + s + "'");
}

std::vector<Qubit> Register::qubits() const {
  std::vector<Qubit> out(length);
  std::iota(out.begin(), out.end(), start);
  return out;
}

std::vector<Qubit> QubitAllocator::take(std::size_t count) {
  std::vector<Qubit> out(count);
  std::iota(out.begin(), out.end(), next_);
  next_ += static_cast<Qubit>(count);
  return out;
}

Register QubitAllocator::take_register(std::size_t count) {
  Register r{next_, count};
  next_ += static_cast<Qubit>(count);
  return r;
}

CircuitIR::CircuitIR(std::size_t num_qubits, GateClass gate_class)
    : num_qubits_(num_qubits), gate_class_(gate_class), frontier_(num_qubits, 0) {}

void CircuitIR::check_class(const Gate& gate) const {
  if (gate_class_ != GateClass::QNC) return;
  if (gate.kind != GateKind::OneQubit && gate.kind != GateKind::TwoQubit && gate.kind != GateKind::OracleCall) {
    throw Error(ErrorCode::InvalidArgument, "QNC circuits admit only one-/two-qubit gates and oracle calls");
  }
}

void CircuitIR::set_num_qubits(std::size_t n) {
  num_qubits_ = std::max(num_qubits_, n);
  if (frontier_.size() < num_qubits_) frontier_.resize(num_qubits_, 0);
}

void CircuitIR::append(Gate gate) {
  check_class(gate);
  std::size_t layer = floor_;
  for (Qubit q : gate.targets) {
    if (q >= frontier_.size()) set_num_qubits(std::size_t{q} + 1);
    layer = std::max(layer, frontier_[q]);
  }
  for (Qubit q : gate.targets) frontier_[q] = layer + 1;
  if (layer >= layers_.size()) layers_.resize(layer + 1);
  layers_[layer].push_back(std::move(gate));
}

void CircuitIR::barrier() { floor_ = layers_.size(); }

void CircuitIR::add_layer(std::vector<Gate> layer) {
  std::vector<Qubit> used;
  for (const Gate& g : layer) {
    check_class(g);
    used.insert(used.end(), g.targets.begin(), g.targets.end());
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw Error(ErrorCode::OverlappingLayer, "two gates in one layer share a qubit");
  }
  if (!used.empty()) set_num_qubits(std::size_t{used.back()} + 1);
  const std::size_t index = layers_.size();
  for (Qubit q : used) frontier_[q] = index + 1;
  layers_.push_back(std::move(layer));
}

void CircuitIR::append_circuit(const CircuitIR& other, std::span<const Qubit> qubit_map) {
  if (qubit_map.size() < other.num_qubits()) {
    throw Error(ErrorCode::DimensionMismatch, "qubit map shorter than appended circuit");
  }
  for (const auto& layer : other.layers()) {
    for (Gate g : layer) {
      for (Qubit& q : g.targets) q = qubit_map[q];
      append(std::move(g));
    }
  }
}

std::size_t CircuitIR::size() const {
  std::size_t s = 0;
  for (const auto& layer : layers_) s += layer.size();
  return s;
}

const Register* CircuitIR::find_register(const std::string& name) const {
  auto it = registers_.find(name);
  return it == registers_.end() ? nullptr : &it->second;
}

void CircuitIR::validate() const {
  std::vector<char> seen(num_qubits_, 0);
  for (const auto& layer : layers_) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const Gate& g : layer) {
      g.validate();
      check_class(g);
      for (Qubit q : g.targets) {
        if (q >= num_qubits_) throw Error(ErrorCode::TargetOutOfRange, "gate target beyond circuit width");
        if (seen[q]) throw Error(ErrorCode::OverlappingLayer, "two gates in one layer share a qubit");
        seen[q] = 1;
      }
    }
  }
  for (const auto& [name, reg] : registers_) {
    if (reg.start + reg.length > num_qubits_) {
      throw Error(ErrorCode::TargetOutOfRange, "register '" + name + "' exceeds circuit width");
    }
  }
}

bool operator==(const CircuitIR& a, const CircuitIR& b) {
  return a.num_qubits_ == b.num_qubits_ && a.gate_class_ == b.gate_class_ && a.layers_ == b.layers_ &&
         a.registers_ == b.registers_;
}

CircuitIR inverse(const CircuitIR& circuit) {
  CircuitIR out(circuit.num_qubits(), circuit.gate_class());
  for (const auto& [name, reg] : circuit.registers()) out.set_register(name, reg);
  const auto& layers = circuit.layers();
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    std::vector<Gate> layer;
    layer.reserve(it->size());
    for (const Gate& g : *it) layer.push_back(g.adjoint());
    out.add_layer(std::move(layer));
  }
  return out;
}

CircuitIR substitute_oracle(const CircuitIR& circuit, const std::string& id, const CircuitIR& replacement,
                            std::span<const Qubit> extra) {
  CircuitIR out(circuit.num_qubits(), circuit.gate_class());
  for (const auto& [name, reg] : circuit.registers()) out.set_register(name, reg);
  const CircuitIR backward = inverse(replacement);
  for (const auto& layer : circuit.layers()) {
    for (const Gate& g : layer) {
      if (g.kind != GateKind::OracleCall || g.oracle != id) {
        out.append(g);
        continue;
      }
      std::vector<Qubit> map(g.targets);
      map.insert(map.end(), extra.begin(), extra.end());
      if (map.size() < replacement.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "oracle replacement needs more qubits than supplied");
      }
      out.append_circuit(g.direction == Direction::Forward ? replacement : backward, map);
    }
  }
  return out;
}

}  // namespace qsynth
