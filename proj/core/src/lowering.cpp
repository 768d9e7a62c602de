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

#include "qsynth/lowering.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "qsynth/error.hpp"

namespace qsynth {

namespace {

struct Ccx {
  Qubit c1, c2, target;
};

GateMatrix controlled(const GateMatrix& u) {
  GateMatrix m = GateMatrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = u;
  return m;
}

GateMatrix sqrt_x() {
  GateMatrix v(2, 2);
  v << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
  return v;
}

// Five layers: CV(c2,t) CX(c1,c2) CV†(c2,t) CX(c1,c2) CV(c1,t).
void emit_ccx_layers(CircuitIR& out, const std::vector<Ccx>& ops) {
  static const GateMatrix cv = controlled(sqrt_x());
  static const GateMatrix cv_dag = controlled(sqrt_x().adjoint());
  static const GateMatrix cx = gates::cnot();
  std::array<std::vector<Gate>, 5> layers;
  for (const Ccx& op : ops) {
    layers[0].push_back(Gate::two_qubit(op.c2, op.target, cv));
    layers[1].push_back(Gate::two_qubit(op.c1, op.c2, cx));
    layers[2].push_back(Gate::two_qubit(op.c2, op.target, cv_dag));
    layers[3].push_back(Gate::two_qubit(op.c1, op.c2, cx));
    layers[4].push_back(Gate::two_qubit(op.c1, op.target, cv));
  }
  for (auto& layer : layers) out.add_layer(std::move(layer));
}

// Pairwise AND levels for `controls`, allocating ancillae from `next`.
// Returns the two surviving nodes through `roots`.
std::vector<std::vector<Ccx>> and_tree(std::vector<Qubit> nodes, Qubit& next, std::array<Qubit, 2>& roots) {
  std::vector<std::vector<Ccx>> levels;
  while (nodes.size() > 2) {
    std::vector<Ccx> level;
    std::vector<Qubit> up;
    for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) {
      const Qubit a = next++;
      level.push_back({nodes[i], nodes[i + 1], a});
      up.push_back(a);
    }
    if (nodes.size() % 2 == 1) up.push_back(nodes.back());
    levels.push_back(std::move(level));
    nodes = std::move(up);
  }
  roots = {nodes[0], nodes[1]};
  return levels;
}

CircuitIR lower_toffoli(std::size_t k) {
  CircuitIR out(k, GateClass::QNC);
  if (k == 2) {
    out.add_layer({Gate::two_qubit(1, 0, gates::cnot())});
    return out;
  }
  std::vector<Qubit> controls;
  for (Qubit i = 1; i < k; ++i) controls.push_back(i);
  Qubit next = static_cast<Qubit>(k);
  std::array<Qubit, 2> roots{};
  const auto levels = and_tree(controls, next, roots);
  for (const auto& level : levels) emit_ccx_layers(out, level);
  emit_ccx_layers(out, {{roots[0], roots[1], 0}});
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) emit_ccx_layers(out, *it);
  return out;
}

CircuitIR lower_fanout(std::size_t k) {
  CircuitIR out(k, GateClass::QNC);
  const std::size_t targets = k - 1;
  std::vector<Qubit> holders{0};
  Qubit next = static_cast<Qubit>(k);
  std::vector<std::vector<Gate>> doubling;
  while (holders.size() < targets) {
    const std::size_t add = std::min(holders.size(), targets - holders.size());
    std::vector<Gate> layer;
    for (std::size_t i = 0; i < add; ++i) {
      layer.push_back(Gate::two_qubit(holders[i], next, gates::cnot()));
      holders.push_back(next++);
    }
    doubling.push_back(std::move(layer));
  }
  for (const auto& layer : doubling) out.add_layer(layer);
  std::vector<Gate> copy;
  for (std::size_t i = 0; i < targets; ++i) {
    copy.push_back(Gate::two_qubit(holders[i], static_cast<Qubit>(i + 1), gates::cnot()));
  }
  out.add_layer(std::move(copy));
  for (auto it = doubling.rbegin(); it != doubling.rend(); ++it) out.add_layer(*it);
  return out;
}

CircuitIR lower_reflection(const std::vector<bool>& pattern) {
  const std::size_t k = pattern.size();
  CircuitIR out(k, GateClass::QNC);
  if (k == 1) {
    GateMatrix d = GateMatrix::Identity(2, 2);
    d(pattern[0] ? 1 : 0, pattern[0] ? 1 : 0) = -1;
    out.add_layer({Gate::one_qubit(0, d)});
    return out;
  }
  if (k == 2) {
    GateMatrix d = GateMatrix::Identity(4, 4);
    const int idx = (pattern[0] ? 2 : 0) + (pattern[1] ? 1 : 0);
    d(idx, idx) = -1;
    out.add_layer({Gate::two_qubit(0, 1, d)});
    return out;
  }
  const Qubit last = static_cast<Qubit>(k - 1);
  auto edge_layer = [&](bool before) {
    std::vector<Gate> layer;
    for (Qubit i = 0; i < last; ++i) {
      if (!pattern[i]) layer.push_back(Gate::one_qubit(i, gates::x()));
    }
    GateMatrix m = gates::h();
    if (!pattern[last]) m = before ? GateMatrix(gates::h() * gates::x()) : GateMatrix(gates::x() * gates::h());
    layer.push_back(Gate::one_qubit(last, m));
    return layer;
  };
  out.add_layer(edge_layer(true));
  const CircuitIR tof = lower_toffoli(k);
  std::vector<Qubit> map(tof.num_qubits());
  map[0] = last;
  for (Qubit i = 1; i < k; ++i) map[i] = i - 1;
  for (std::size_t i = k; i < map.size(); ++i) map[i] = static_cast<Qubit>(i);
  for (const auto& layer : tof.layers()) {
    std::vector<Gate> mapped;
    for (Gate g : layer) {
      for (Qubit& q : g.targets) q = map[q];
      mapped.push_back(std::move(g));
    }
    out.add_layer(std::move(mapped));
  }
  out.add_layer(edge_layer(false));
  return out;
}

std::size_t ceil_log2(std::size_t v) { return v <= 1 ? 0 : std::bit_width(v - 1); }

LoweringCost toffoli_cost(std::size_t k) {
  if (k == 2) return {1, 1, 0};
  std::size_t nodes = k - 1;
  std::size_t levels = 0;
  std::size_t ancillae = 0;
  while (nodes > 2) {
    ancillae += nodes / 2;
    nodes = nodes / 2 + nodes % 2;
    ++levels;
  }
  return {5 * (2 * levels + 1), 5 * (2 * ancillae + 1), ancillae};
}

}  // namespace

LoweringCost lowering_cost(const Gate& gate) {
  const std::size_t k = gate.arity();
  switch (gate.kind) {
    case GateKind::OneQubit:
    case GateKind::TwoQubit:
    case GateKind::OracleCall:
      return {1, 1, 0};
    case GateKind::Toffoli:
      return toffoli_cost(k);
    case GateKind::Fanout: {
      const std::size_t targets = k - 1;
      return {2 * ceil_log2(targets) + 1, 2 * (targets - 1) + targets, targets - 1};
    }
    case GateKind::BasisReflection: {
      if (k <= 2) return {1, 1, 0};
      const LoweringCost t = toffoli_cost(k);
      std::size_t zeros = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) zeros += gate.pattern[i] ? 0 : 1;
      return {t.depth + 2, t.size + 2 * (zeros + 1), t.ancillae};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown gate kind");
}

CircuitIR lower_gate(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::Toffoli:
      return lower_toffoli(gate.arity());
    case GateKind::Fanout:
      return lower_fanout(gate.arity());
    case GateKind::BasisReflection:
      return lower_reflection(gate.pattern);
    default: {
      CircuitIR out(gate.arity(), GateClass::QNC);
      Gate local = gate;
      for (std::size_t i = 0; i < local.targets.size(); ++i) local.targets[i] = static_cast<Qubit>(i);
      out.add_layer({local});
      return out;
    }
  }
}

CircuitIR lower_to_qnc(const CircuitIR& circuit) {
  const std::size_t base = circuit.num_qubits();
  CircuitIR out(base, GateClass::QNC);
  std::size_t max_ancillae = 0;
  for (const auto& layer : circuit.layers()) {
    std::vector<std::vector<Gate>> block(1);
    Qubit next = static_cast<Qubit>(base);
    for (const Gate& g : layer) {
      if (g.kind == GateKind::OneQubit || g.kind == GateKind::TwoQubit || g.kind == GateKind::OracleCall) {
        block[0].push_back(g);
        continue;
      }
      const CircuitIR sub = lower_gate(g);
      std::vector<Qubit> map(g.targets);
      while (map.size() < sub.num_qubits()) map.push_back(next++);
      if (sub.depth() > block.size()) block.resize(sub.depth());
      for (std::size_t j = 0; j < sub.depth(); ++j) {
        for (Gate sg : sub.layers()[j]) {
          for (Qubit& q : sg.targets) q = map[q];
          block[j].push_back(std::move(sg));
        }
      }
    }
    max_ancillae = std::max<std::size_t>(max_ancillae, next - base);
    for (auto& l : block) out.add_layer(std::move(l));
  }
  out.set_num_qubits(base + max_ancillae);
  for (const auto& [name, reg] : circuit.registers()) out.set_register(name, reg);
  if (max_ancillae > 0) out.set_register("lowering", Register{static_cast<Qubit>(base), max_ancillae});
  return out;
}

}  // namespace qsynth
