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

#include <algorithm>

#include "qsynth/amplitude_tree.hpp"
#include "qsynth/error.hpp"
#include "qsynth/linalg.hpp"
#include "qsynth/state_circuit.hpp"
#include "qsynth/unitsynth.hpp"

namespace qsynth {

std::size_t ControlledSink::controls_needed() const {
  std::size_t w = 0;
  for (const auto& layer : inner_.layers()) w = std::max(w, layer.size());
  return w;
}

std::size_t ControlledSink::scratch_needed() const {
  std::size_t w = 0;
  for (const auto& layer : inner_.layers()) {
    w = std::max<std::size_t>(w, static_cast<std::size_t>(std::count_if(
                                     layer.begin(), layer.end(), [](const Gate& g) { return g.kind == GateKind::Fanout; })));
  }
  return w;
}

void ControlledSink::flush(CircuitSink& out, std::span<const Qubit> controls, std::span<const Qubit> scratch) const {
  if (controls.size() < controls_needed() || scratch.size() < scratch_needed()) {
    throw Error(ErrorCode::InvalidArgument, "controlled sink pool too small");
  }
  for (const auto& layer : inner_.layers()) {
    std::size_t si = 0;
    for (std::size_t ci = 0; ci < layer.size(); ++ci) {
      const Gate& gate = layer[ci];
      const Qubit b = controls[ci];
      switch (gate.kind) {
        case GateKind::OneQubit:
          if (gate.matrix.isApprox(gates::x())) {
            out.append(Gate::cnot(b, gate.targets[0]));
          } else {
            emit_controlled_one_qubit(out, b, gate.targets[0], gate.matrix);
          }
          break;
        case GateKind::Toffoli: {
          std::vector<Qubit> cs(gate.targets.begin() + 1, gate.targets.end());
          cs.push_back(b);
          out.append(Gate::toffoli(gate.targets[0], std::move(cs)));
          break;
        }
        case GateKind::Fanout: {
          // ts ^= a AND b through a scratch bit c = a AND b.
          const Qubit c = scratch[si++];
          const Qubit a = gate.targets[0];
          out.append(Gate::toffoli(c, {a, b}));
          out.append(Gate::fanout(c, std::vector<Qubit>(gate.targets.begin() + 1, gate.targets.end())));
          out.append(Gate::toffoli(c, {a, b}));
          break;
        }
        default:
          throw Error(ErrorCode::InvalidArgument, "controlled sink handles one-qubit, Toffoli and fanout gates only");
      }
    }
  }
}

namespace {

std::size_t qubit_count(const Matrix& u) {
  const auto dim = static_cast<std::size_t>(u.rows());
  if (dim < 2 || u.cols() != u.rows() || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::DimensionMismatch, "unitary must be square with power-of-two dimension");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

void xs(CircuitSink& sink, const std::vector<Qubit>& qs) {
  for (Qubit q : qs) sink.append(Gate::one_qubit(q, gates::x()));
}

}  // namespace

GateLevelLayout emit_gate_level_qram(CircuitSink& sink, const Matrix& u, const std::function<void(int)>& on_stage) {
  if (!is_unitary(u)) throw Error(ErrorCode::NonUnitaryInput, "gate-level qRAM needs a unitary");
  const std::size_t n = qubit_count(u);
  const std::size_t dim = std::size_t{1} << n;
  QubitAllocator alloc;
  GateLevelLayout lay;
  lay.n = n;
  lay.x = alloc.take_register(n);
  lay.s = alloc.take_register(n);
  for (std::size_t y = 0; y < dim; ++y) lay.r.push_back(alloc.take_register(n));

  // Pool sizes from a dry run; the gate pattern does not depend on amplitudes.
  std::size_t pool_size = n;
  std::size_t scratch_size = 0;
  {
    ControlledSink dry;
    QubitAllocator tmp;
    const std::vector<Qubit> out = tmp.take(n);
    emit_state_preparation(dry, amplitude_tree(StateVector(n)), out, tmp);
    pool_size = std::max(pool_size, dry.controls_needed());
    scratch_size = dry.scratch_needed();
  }

  std::vector<std::vector<Qubit>> xcopy(n);
  for (std::size_t i = 0; i < n; ++i) xcopy[i] = alloc.take(dim);
  std::vector<Qubit> eq(dim);
  std::vector<std::vector<Qubit>> pool(dim);
  std::vector<std::vector<Qubit>> scratch(dim);
  for (std::size_t y = 0; y < dim; ++y) {
    eq[y] = alloc.take();
    pool[y] = alloc.take(pool_size);
    scratch[y] = alloc.take(scratch_size);
  }
  std::vector<Qubit> negated;
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!((y >> (n - 1 - i)) & 1U)) negated.push_back(xcopy[i][y]);
    }
  }
  auto equality = [&] {
    for (std::size_t i = 0; i < n; ++i) sink.append(Gate::fanout(lay.x[i], xcopy[i]));
    xs(sink, negated);
    for (std::size_t y = 0; y < dim; ++y) {
      std::vector<Qubit> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = xcopy[i][y];
      sink.append(Gate::toffoli(eq[y], std::move(c)));
    }
    xs(sink, negated);
    for (std::size_t i = 0; i < n; ++i) sink.append(Gate::fanout(lay.x[i], xcopy[i]));
  };
  auto spread = [&] {
    for (std::size_t y = 0; y < dim; ++y) sink.append(Gate::fanout(eq[y], pool[y]));
  };
  equality();
  spread();

  // Step 1: U|y> into R_y when x = y.
  for (std::size_t y = 0; y < dim; ++y) {
    std::vector<Complex> col(dim);
    for (std::size_t z = 0; z < dim; ++z) col[z] = u(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(y));
    const AmplitudeTree tree = amplitude_tree(StateVector::from_amplitudes(std::move(col)));
    ControlledSink controlled;
    emit_state_preparation(controlled, tree, lay.r[y].qubits(), alloc);
    controlled.flush(sink, pool[y], scratch[y]);
  }
  sink.barrier();
  if (on_stage) on_stage(1);

  // Step 2: S_j = OR_y R_y[j], by De Morgan.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Qubit> col;
    for (std::size_t y = 0; y < dim; ++y) col.push_back(lay.r[y][j]);
    xs(sink, col);
    sink.append(Gate::toffoli(lay.s[j], col));
    sink.append(Gate::one_qubit(lay.s[j], gates::x()));
    xs(sink, col);
  }
  sink.barrier();
  if (on_stage) on_stage(2);

  // Step 3: R_y ^= S when x = y.
  std::vector<std::vector<Qubit>> scopy(n);
  for (std::size_t j = 0; j < n; ++j) scopy[j] = alloc.take(dim);
  for (std::size_t j = 0; j < n; ++j) sink.append(Gate::fanout(lay.s[j], scopy[j]));
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t j = 0; j < n; ++j) sink.append(Gate::toffoli(lay.r[y][j], {pool[y][j], scopy[j][y]}));
  }
  for (std::size_t j = 0; j < n; ++j) sink.append(Gate::fanout(lay.s[j], scopy[j]));
  sink.barrier();
  if (on_stage) on_stage(3);

  spread();
  equality();
  lay.num_qubits = alloc.count();
  return lay;
}

GateLevelQram build_gate_level_qram(const Matrix& u) {
  GateLevelQram g;
  g.circuit = CircuitIR(0, GateClass::QACf0);
  g.layout = emit_gate_level_qram(g.circuit, u, [&](int) { g.stage_layers.push_back(g.circuit.depth()); });
  g.circuit.set_num_qubits(g.layout.num_qubits);
  g.circuit.set_register("input", g.layout.x);
  g.circuit.set_register("output", g.layout.s);
  const std::size_t rs = g.layout.r.size() * g.layout.n;
  g.circuit.set_register("rows", Register{g.layout.r.front().start, rs});
  return g;
}

}  // namespace qsynth
