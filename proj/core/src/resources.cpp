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

#include "qsynth/resources.hpp"

#include <algorithm>

namespace qsynth {

void ResourceTally::append(Gate gate) {
  std::size_t layer = floor_;
  for (Qubit q : gate.targets) {
    if (q >= frontier_.size()) frontier_.resize(std::size_t{q} + 1, 0);
    layer = std::max(layer, frontier_[q]);
  }
  for (Qubit q : gate.targets) frontier_[q] = layer + 1;
  record(layer, gate);
}

void ResourceTally::record(std::size_t layer, const Gate& gate) {
  if (layer >= layers_.size()) layers_.resize(layer + 1);
  for (Qubit q : gate.targets) num_qubits_ = std::max<std::size_t>(num_qubits_, std::size_t{q} + 1);
  LayerAcc& acc = layers_[layer];
  if (gate.kind == GateKind::OracleCall) {
    const bool forward = gate.direction == Direction::Forward;
    (forward ? forward_ : backward_) += 1;
    auto it = costs_.find(gate.oracle);
    if (it != costs_.end()) {
      const ResourceReport& c = it->second;
      acc.native_depth = std::max(acc.native_depth, c.depth);
      acc.lowered_depth = std::max(acc.lowered_depth, c.depth);
      native_size_ += c.size;
      lowered_size_ += c.size;
      forward_ += forward ? c.forward_queries : c.backward_queries;
      backward_ += forward ? c.backward_queries : c.forward_queries;
      return;
    }
  }
  const LoweringCost low = lowering_cost(gate);
  acc.native_depth = std::max<std::size_t>(acc.native_depth, 1);
  acc.lowered_depth = std::max(acc.lowered_depth, low.depth);
  acc.lowering_ancillae += low.ancillae;
  native_size_ += 1;
  lowered_size_ += low.size;
}

ResourceReport ResourceTally::native() const {
  ResourceReport r;
  for (const auto& l : layers_) r.depth += l.native_depth;
  r.size = native_size_;
  r.num_qubits = num_qubits_;
  r.ancillae = num_qubits_ - std::min(num_qubits_, io_width_);
  r.forward_queries = forward_;
  r.backward_queries = backward_;
  return r;
}

ResourceReport ResourceTally::lowered() const {
  ResourceReport r;
  std::size_t extra = 0;
  for (const auto& l : layers_) {
    r.depth += l.lowered_depth;
    extra = std::max(extra, l.lowering_ancillae);
  }
  r.size = lowered_size_;
  r.num_qubits = num_qubits_ + extra;
  r.ancillae = r.num_qubits - std::min(r.num_qubits, io_width_);
  r.forward_queries = forward_;
  r.backward_queries = backward_;
  return r;
}

std::size_t io_width(const CircuitIR& circuit) {
  if (const Register* r = circuit.find_register("input")) return r->length;
  if (const Register* r = circuit.find_register("output")) return r->length;
  return 0;
}

namespace {

ResourceTally tally_layers(const CircuitIR& circuit, const OracleCosts& costs) {
  ResourceTally tally(costs);
  tally.set_num_qubits(circuit.num_qubits());
  tally.set_io_width(io_width(circuit));
  for (std::size_t i = 0; i < circuit.layers().size(); ++i) {
    for (const Gate& g : circuit.layers()[i]) tally.record(i, g);
  }
  return tally;
}

}  // namespace

ResourceReport report(const CircuitIR& circuit, const OracleCosts& costs) {
  return tally_layers(circuit, costs).native();
}

ResourceReport lowered_report(const CircuitIR& circuit, const OracleCosts& costs) {
  return tally_layers(circuit, costs).lowered();
}

}  // namespace qsynth
