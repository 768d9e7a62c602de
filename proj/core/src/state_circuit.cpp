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

#include "qsynth/state_circuit.hpp"

#include "qsynth/error.hpp"
#include "qsynth/indexing.hpp"
#include "qsynth/linalg.hpp"
#include "qsynth/lowering.hpp"

namespace qsynth {

namespace {

void x_gates(CircuitSink& sink, const std::vector<Qubit>& qs) {
  for (Qubit q : qs) sink.append(Gate::one_qubit(q, gates::x()));
}

}  // namespace

StatePrepLayout emit_state_preparation(CircuitSink& sink, const AmplitudeTree& tree,
                                       std::span<const Qubit> output, QubitAllocator& alloc, bool staged) {
  const std::size_t n = tree.n;
  if (output.size() != n) throw Error(ErrorCode::DimensionMismatch, "output register must have n qubits");
  StatePrepLayout lay;
  lay.output.assign(output.begin(), output.end());
  if (n == 1) {
    sink.append(Gate::one_qubit(output[0], tree.child_gate(1)));
    return lay;
  }
  const std::size_t nodes = std::size_t{1} << n;  // heap indices 1 .. nodes-1
  lay.tree.assign(nodes, 0);
  for (std::size_t h = 1; h < nodes; ++h) lay.tree[h] = alloc.take();
  auto fresh = [&](std::size_t count) {
    std::vector<Qubit> q = alloc.take(count);
    lay.ancillae.insert(lay.ancillae.end(), q.begin(), q.end());
    return q;
  };

  // Each R_x holds beta_{x0}|0> + beta_{x1}|1>.
  for (std::size_t h = 1; h < nodes; ++h) sink.append(Gate::one_qubit(lay.tree[h], tree.child_gate(h)));
  if (staged) sink.barrier();

  // U_f: copy every tree bit once per literal, AND per term, OR per output bit.
  const Dnf dnf = build_f_dnf(n);
  const std::vector<std::size_t> fan_in = dnf.fan_in();
  std::vector<std::vector<Qubit>> copies(nodes);
  for (std::size_t h = 1; h < nodes; ++h) copies[h] = fresh(fan_in[h]);
  std::vector<std::size_t> used(nodes, 0);
  std::vector<Qubit> negated;
  struct TermWires {
    Qubit anc;
    std::vector<Qubit> inputs;
  };
  std::vector<std::vector<TermWires>> terms(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const Term& t : dnf.outputs[j]) {
      TermWires w{fresh(1)[0], {}};
      for (const Literal& l : t.literals) {
        const Qubit c = copies[l.node][used[l.node]++];
        w.inputs.push_back(c);
        if (!l.want) negated.push_back(c);
      }
      terms[j].push_back(std::move(w));
    }
  }
  auto fan_tree_copies = [&] {
    for (std::size_t h = 1; h < nodes; ++h) sink.append(Gate::fanout(lay.tree[h], copies[h]));
  };
  auto and_terms = [&] {
    for (const auto& row : terms) {
      for (const TermWires& w : row) sink.append(Gate::toffoli(w.anc, w.inputs));
    }
  };
  fan_tree_copies();
  x_gates(sink, negated);
  and_terms();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Qubit> ancs;
    for (const TermWires& w : terms[j]) ancs.push_back(w.anc);
    x_gates(sink, ancs);
    sink.append(Gate::toffoli(output[j], ancs));
    sink.append(Gate::one_qubit(output[j], gates::x()));
    x_gates(sink, ancs);
  }
  and_terms();
  x_gates(sink, negated);
  fan_tree_copies();
  if (staged) sink.barrier();

  // Cleanup: controlled on t in S, R_x -> |0>, by flipping path nodes and
  // undoing W_x off the path.
  std::vector<std::vector<Qubit>> s_copies(n);
  std::vector<std::size_t> s_used(n, 0);
  {
    std::vector<std::size_t> need(n, 0);
    need[0] += 1;  // root flip
    for (std::size_t h = 2; h < nodes; ++h) {
      const std::size_t d = BitString::from_heap_index(h).length;
      for (std::size_t i = 0; i < d; ++i) need[i] += 1;
      need[d] += 1;
    }
    for (std::size_t j = 0; j < n; ++j) s_copies[j] = fresh(need[j]);
  }
  auto fan_s = [&] {
    for (std::size_t j = 0; j < n; ++j) sink.append(Gate::fanout(output[j], s_copies[j]));
  };
  fan_s();
  sink.append(Gate::cnot(s_copies[0][s_used[0]++], lay.tree[1]));
  for (std::size_t h = 2; h < nodes; ++h) {
    const BitString x = BitString::from_heap_index(h);
    std::vector<Qubit> eq;
    std::vector<Qubit> zeros;
    for (std::size_t i = 0; i < x.length; ++i) {
      const Qubit c = s_copies[i][s_used[i]++];
      eq.push_back(c);
      if (!x.bit(i)) zeros.push_back(c);
    }
    const Qubit flip = s_copies[x.length][s_used[x.length]++];
    const Qubit e = fresh(1)[0];
    x_gates(sink, zeros);
    sink.append(Gate::toffoli(e, eq));
    sink.append(Gate::one_qubit(e, gates::x()));
    emit_controlled_one_qubit(sink, e, lay.tree[h], tree.child_gate(h).adjoint());
    sink.append(Gate::one_qubit(e, gates::x()));
    sink.append(Gate::toffoli(lay.tree[h], {e, flip}));
    sink.append(Gate::toffoli(e, eq));
    x_gates(sink, zeros);
  }
  fan_s();
  return lay;
}

CircuitIR build_qacf0_state_circuit(const StateVector& psi) {
  const AmplitudeTree tree = amplitude_tree(psi);
  const std::size_t n = tree.n;
  CircuitIR c(n, GateClass::QACf0);
  std::vector<Qubit> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Qubit>(i);
  QubitAllocator alloc(static_cast<Qubit>(n));
  const StatePrepLayout lay = emit_state_preparation(c, tree, out, alloc, true);
  c.set_num_qubits(alloc.count());
  c.set_register("output", Register{0, n});
  if (!lay.tree.empty()) c.set_register("tree", Register{static_cast<Qubit>(n), lay.tree.size() - 1});
  if (!lay.ancillae.empty()) {
    c.set_register("ancilla", Register{lay.ancillae.front(), lay.ancillae.size()});
  }
  return c;
}

CircuitIR build_qnc_state_circuit(const StateVector& psi) { return lower_to_qnc(build_qacf0_state_circuit(psi)); }

CompactSynthesis compact_state_synthesis(const AmplitudeTree& tree) {
  const std::size_t n = tree.n;
  CompactSynthesis out;
  if (n == 1) {
    StateVector s(1);
    s.apply_matrix(std::vector<Qubit>{0}, Matrix(tree.child_gate(1)));
    out.output = s;
    return out;
  }
  const std::size_t nodes = std::size_t{1} << n;
  const std::size_t width = nodes - 1 + n;
  auto r = [](std::size_t h) { return static_cast<Qubit>(h - 1); };
  std::vector<Qubit> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = static_cast<Qubit>(nodes - 1 + j);

  StateVector st(width);
  for (std::size_t h = 1; h < nodes; ++h) st.apply_matrix(std::vector<Qubit>{r(h)}, Matrix(tree.child_gate(h)));
  st.apply_permutation([&](BasisKey& k) {
    PrefixAssignment a(nodes, false);
    for (std::size_t h = 1; h < nodes; ++h) a[h] = k.get(r(h));
    k.write(s, k.read(s) ^ eval_f(a, n).value);
  });
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix x = Matrix(gates::x());
  std::vector<Matrix> undo(nodes);
  for (std::size_t h = 1; h < nodes; ++h) undo[h] = tree.child_gate(h).adjoint();
  for (std::size_t h = 1; h < nodes; ++h) {
    const BitString node = BitString::from_heap_index(h);
    st.apply_conditional(std::vector<Qubit>{r(h)}, [&](const BasisKey& k) -> const Matrix* {
      const BitString t{n, k.read(s)};
      if (t.prefix(node.length) != node) return &undo[h];
      return t.bit(node.length) ? &x : &id;
    });
  }
  std::vector<Qubit> rs;
  for (std::size_t h = 1; h < nodes; ++h) rs.push_back(r(h));
  out.residue = std::max(0.0, 1.0 - st.zero_probability(rs));
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = st[i];
  out.output = StateVector::from_amplitudes(std::move(amps));
  return out;
}

}  // namespace qsynth
