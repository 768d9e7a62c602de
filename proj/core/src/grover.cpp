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

#include "qsynth/grover.hpp"

#include <cmath>
#include <numbers>

#include "qsynth/error.hpp"

namespace qsynth {

GroverParams grover_params(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "grover needs n >= 1");
  GroverParams g;
  g.n = n;
  g.t = static_cast<std::size_t>(std::ceil(std::numbers::pi / 4 * std::exp2(static_cast<double>(n) / 2)));
  g.theta = (std::numbers::pi / 2) / static_cast<double>(2 * g.t + 1);
  const double s = std::sin(g.theta);
  g.p = std::exp2(static_cast<double>(n)) * s * s;
  if (!(g.p > 0) || g.p > 1) throw Error(ErrorCode::InvalidArgument, "grover start mass outside (0, 1]");
  return g;
}

MarkedReflectionOracle::MarkedReflectionOracle(std::size_t n, BitString marked)
    : n_(n), marked_(marked), counter_(std::make_shared<QueryCounter>()) {
  if (marked.length != n) throw Error(ErrorCode::DimensionMismatch, "marked string length differs from n");
}

OracleFn MarkedReflectionOracle::binding() const {
  std::vector<bool> pattern;
  for (std::size_t i = 0; i < n_; ++i) pattern.push_back(marked_.bit(i));
  pattern.push_back(true);
  auto counter = counter_;
  return [pattern, counter](QuantumState& state, std::span<const Qubit> targets, Direction dir) {
    if (targets.size() != pattern.size()) throw Error(ErrorCode::DimensionMismatch, "marked oracle width");
    ++(dir == Direction::Forward ? counter->forward : counter->backward);
    state.apply_basis_reflection(targets, pattern);
  };
}

Matrix MarkedReflectionOracle::matrix() const {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << (n_ + 1));
  Matrix m = Matrix::Identity(dim, dim);
  const auto idx = static_cast<Eigen::Index>((marked_.value << 1) | 1U);
  m(idx, idx) = -1;
  return m;
}

namespace {

void prep_layer(CircuitIR& c, std::size_t n, double flag_angle, bool dagger, bool negate) {
  std::vector<Gate> layer;
  for (Qubit q = 0; q < n; ++q) layer.push_back(Gate::one_qubit(q, gates::h()));
  GateMatrix f = gates::ry(dagger ? -flag_angle : flag_angle);
  if (negate) f = -f;
  layer.push_back(Gate::one_qubit(static_cast<Qubit>(n), f));
  c.add_layer(std::move(layer));
}

// 2|psi0><psi0| - I = -P (I - 2|0><0|) P^dagger; the sign rides on the flag gate.
void diffusion(CircuitIR& c, std::size_t n, double flag_angle) {
  prep_layer(c, n, flag_angle, true, false);
  std::vector<Qubit> all;
  for (Qubit q = 0; q <= n; ++q) all.push_back(q);
  c.add_layer({Gate::basis_reflection(all, std::vector<bool>(n + 1, false))});
  prep_layer(c, n, flag_angle, false, true);
}

double flag_angle(const GroverParams& g) { return 2 * std::asin(std::sqrt(g.p)); }

}  // namespace

CircuitIR build_diffusion(std::size_t n) {
  const GroverParams g = grover_params(n);
  CircuitIR c(n + 1, GateClass::QACf0);
  diffusion(c, n, flag_angle(g));
  return c;
}

CircuitIR build_exact_grover(std::size_t n) {
  const GroverParams g = grover_params(n);
  const double angle = flag_angle(g);
  CircuitIR c(n + 1, GateClass::Oracle);
  c.set_register("grover", Register{0, n + 1});
  c.set_register("output", Register{0, n});
  c.set_register("flag", Register{static_cast<Qubit>(n), 1});
  std::vector<Qubit> all;
  for (Qubit q = 0; q <= n; ++q) all.push_back(q);
  prep_layer(c, n, angle, false, false);
  for (std::size_t i = 0; i < g.t; ++i) {
    c.add_layer({Gate::oracle_call(kMarkedOracle, all)});
    diffusion(c, n, angle);
  }
  c.add_layer({Gate::one_qubit(static_cast<Qubit>(n), gates::x())});
  return c;
}

CircuitIR build_reverse_grover(std::size_t n) { return inverse(build_exact_grover(n)); }

GroverRun run_exact_grover(std::size_t n, MarkedReflectionOracle& oracle) {
  if (oracle.n() != n) throw Error(ErrorCode::DimensionMismatch, "oracle built for a different n");
  const CircuitIR c = build_exact_grover(n);
  StateVector s(n + 1);
  const std::size_t before = oracle.query_count();
  apply_circuit(s, c, {{kMarkedOracle, oracle.binding()}});
  GroverRun run;
  run.queries = oracle.query_count() - before;
  // Most likely outcome of measuring the search register.
  std::size_t best = 0;
  double best_p = -1;
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    const double p = std::norm(s[x << 1]) + std::norm(s[(x << 1) | 1U]);
    if (p > best_p) {
      best_p = p;
      best = x;
    }
  }
  run.found = BitString{n, best};
  run.fidelity = std::norm(s[oracle.marked().value << 1]);
  return run;
}

}  // namespace qsynth
