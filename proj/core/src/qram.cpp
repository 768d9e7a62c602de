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

#include "qsynth/qram.hpp"

#include <bit>
#include <random>

#include "qsynth/error.hpp"

namespace qsynth {

OracleFn QramOracle::binding() const {
  auto fn = action;
  auto c = counter;
  return [fn, c](QuantumState& state, std::span<const Qubit> targets, Direction dir) {
    ++(dir == Direction::Forward ? c->forward : c->backward);
    fn(state, targets, dir);
  };
}

namespace {

std::size_t qubits_of(const Matrix& u) {
  const auto dim = static_cast<std::size_t>(u.rows());
  if (dim < 2 || u.cols() != u.rows() || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::DimensionMismatch, "unitary must be square with power-of-two dimension");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

void xor_register(QuantumState& state, std::span<const Qubit> src, std::span<const Qubit> dst,
                  const std::function<std::uint64_t(std::uint64_t)>& f) {
  state.apply_permutation([&](BasisKey& k) { k.write(dst, k.read(dst) ^ f(k.read(src))); });
}

}  // namespace

QramOracle functional_qram(const Matrix& u) {
  if (!is_unitary(u)) throw Error(ErrorCode::NonUnitaryInput, "functional qRAM needs a unitary");
  const std::size_t n = qubits_of(u);
  QramOracle a;
  a.n = n;
  a.m = 2 * n;
  a.kind = "functional";
  a.target = u;
  auto fwd = std::make_shared<const Matrix>(u);
  auto bwd = std::make_shared<const Matrix>(u.adjoint());
  a.action = [n, fwd, bwd](QuantumState& state, std::span<const Qubit> t, Direction dir) {
    if (t.size() < 2 * n) throw Error(ErrorCode::DimensionMismatch, "qRAM call site too narrow");
    const auto x = t.subspan(0, n);
    const auto y = t.subspan(n, n);
    auto id = [](std::uint64_t v) { return v; };
    if (dir == Direction::Forward) {
      xor_register(state, x, y, id);
      state.apply_matrix(y, *fwd);
    } else {
      state.apply_matrix(y, *bwd);
      xor_register(state, x, y, id);
    }
  };
  return a;
}

QramOracle permutation_qram(const std::vector<std::uint64_t>& sigma) {
  const std::size_t size = sigma.size();
  if (size < 2 || !std::has_single_bit(size)) throw Error(ErrorCode::NotABijection, "domain must be 2^n strings");
  std::vector<bool> hit(size, false);
  for (std::uint64_t v : sigma) {
    if (v >= size || hit[v]) throw Error(ErrorCode::NotABijection, "sigma is not a bijection");
    hit[v] = true;
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(size));
  QramOracle a;
  a.n = n;
  a.m = 2 * n;
  a.kind = "permutation";
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t x = 0; x < size; ++x) p(static_cast<Eigen::Index>(sigma[x]), static_cast<Eigen::Index>(x)) = 1;
  a.target = p;
  auto table = std::make_shared<const std::vector<std::uint64_t>>(sigma);
  a.action = [n, table](QuantumState& state, std::span<const Qubit> t, Direction) {
    if (t.size() < 2 * n) throw Error(ErrorCode::DimensionMismatch, "qRAM call site too narrow");
    xor_register(state, t.subspan(0, n), t.subspan(n, n), [&](std::uint64_t x) { return (*table)[x]; });
  };
  return a;
}

QramOracle circuit_qram(CircuitIR circuit, std::size_t n, std::optional<Matrix> target, Bindings inner) {
  if (circuit.num_qubits() < 2 * n) throw Error(ErrorCode::DimensionMismatch, "qRAM circuit narrower than 2n");
  QramOracle a;
  a.n = n;
  a.m = circuit.num_qubits();
  a.kind = "circuit";
  a.target = std::move(target);
  a.action = circuit_binding(circuit, std::move(inner));
  a.circuit = std::move(circuit);
  return a;
}

Matrix qram_matrix(const QramOracle& a, const SimulationLimits& limits) {
  if (a.m > limits.matrix_qubits) throw Error(ErrorCode::TooManyQubits, "qRAM too wide for a full matrix");
  const std::size_t dim = std::size_t{1} << a.m;
  std::vector<Qubit> all(a.m);
  for (std::size_t i = 0; i < a.m; ++i) all[i] = static_cast<Qubit>(i);
  Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector s(a.m, j);
    a.action(s, all, Direction::Forward);
    for (std::size_t i = 0; i < dim; ++i) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s[i];
  }
  return out;
}

QramCheck verify_qram(const QramOracle& a, const Matrix& u, double tol) {
  if (qubits_of(u) != a.n || a.m < 2 * a.n) throw Error(ErrorCode::DimensionMismatch, "qRAM and unitary disagree");
  const std::size_t n = a.n;
  std::vector<Qubit> all(a.m);
  for (std::size_t i = 0; i < a.m; ++i) all[i] = static_cast<Qubit>(i);
  const std::span<const Qubit> xs(all.data(), n);
  const std::span<const Qubit> ys(all.data() + n, n);

  std::vector<std::uint64_t> inputs;
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (n <= 8) {
    for (std::uint64_t x = 0; x < dim; ++x) inputs.push_back(x);
  } else {
    Rng rng(0);
    std::uniform_int_distribution<std::uint64_t> pick(0, dim - 1);
    for (int i = 0; i < 256; ++i) inputs.push_back(pick(rng));
  }

  QramCheck check;
  for (std::uint64_t x : inputs) {
    BasisKey in(a.m);
    in.write(xs, x);
    SparseState s(a.m, in);
    a.action(s, all, Direction::Forward);
    SparseState expected(a.m);
    for (std::uint64_t y = 0; y < dim; ++y) {
      BasisKey k = in;
      k.write(ys, y);
      expected.add(k, u(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)));
    }
    double err = 0;
    for (const auto& [k, amp] : s.amplitudes()) err += std::norm(amp - expected.amplitude(k));
    for (const auto& [k, amp] : expected.amplitudes()) {
      if (s.amplitudes().find(k) == s.amplitudes().end()) err += std::norm(amp);
    }
    check.worst_deviation = std::max(check.worst_deviation, std::sqrt(err));
    ++check.inputs_checked;
  }
  check.ok = check.worst_deviation <= tol;
  return check;
}

CircuitIR reflection_from_qram(std::size_t n, std::size_t m) {
  if (m < 2 * n || n == 0) throw Error(ErrorCode::DimensionMismatch, "qRAM width must be at least 2n");
  CircuitIR c(m + 1, GateClass::Oracle);
  std::vector<Qubit> a(m);
  for (std::size_t i = 0; i < m; ++i) a[i] = static_cast<Qubit>(i);
  std::vector<Qubit> rest(a.begin() + static_cast<std::ptrdiff_t>(n), a.end());
  rest.push_back(static_cast<Qubit>(m));
  std::vector<bool> pattern(rest.size(), false);
  pattern.back() = true;
  c.append(Gate::oracle_call(kQramOracle, a, Direction::Backward));
  c.append(Gate::basis_reflection(rest, pattern));
  c.append(Gate::oracle_call(kQramOracle, a, Direction::Forward));
  c.set_register("qram", Register{0, m});
  c.set_register("flag", Register{static_cast<Qubit>(m), 1});
  return c;
}

CircuitIR reflection_from_qram(const QramOracle& a) { return reflection_from_qram(a.n, a.m); }

std::vector<Qubit> ViaQramLayout::a_qubits() const {
  std::vector<Qubit> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = a_qubit(i);
  return out;
}

void emit_via_qram(CircuitSink& sink, std::size_t n, std::size_t m) {
  if (m < 2 * n || n == 0) throw Error(ErrorCode::DimensionMismatch, "qRAM width must be at least 2n");
  const ViaQramLayout lay{n, m};
  const std::vector<Qubit> a = lay.a_qubits();
  std::vector<Qubit> rest(a.begin() + static_cast<std::ptrdiff_t>(n), a.end());
  rest.push_back(lay.flag());
  std::vector<bool> pattern(rest.size(), false);
  pattern.back() = true;

  sink.append(Gate::oracle_call(kQramOracle, a, Direction::Forward));
  // Grover qubits coincide with x and the flag, so non-oracle gates map 1:1.
  const CircuitIR grover = build_reverse_grover(n);
  for (const auto& layer : grover.layers()) {
    for (const Gate& g : layer) {
      if (g.kind == GateKind::OracleCall) {
        sink.append(Gate::oracle_call(kQramOracle, a, Direction::Backward));
        sink.append(Gate::basis_reflection(rest, pattern));
        sink.append(Gate::oracle_call(kQramOracle, a, Direction::Forward));
      } else {
        sink.append(g);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    sink.append(Gate::two_qubit(static_cast<Qubit>(j), lay.a_qubit(n + j), gates::swap()));
  }
}

CircuitIR implement_via_qram(std::size_t n, std::size_t m) {
  const ViaQramLayout lay{n, m};
  CircuitIR c(lay.width(), GateClass::Oracle);
  emit_via_qram(c, n, m);
  c.set_register("input", Register{0, n});
  c.set_register("output", Register{0, n});
  c.set_register("grover", Register{0, n + 1});
  c.set_register("flag", Register{lay.flag(), 1});
  if (m > n) c.set_register("qram", Register{static_cast<Qubit>(n + 1), m - n});
  return c;
}

CircuitIR implement_via_qram(const QramOracle& a, bool precheck) {
  if (precheck && a.target) {
    const QramCheck check = verify_qram(a, *a.target);
    if (!check.ok) {
      throw Error(ErrorCode::QramPropertyViolated,
                  "qRAM deviates from its target by " + std::to_string(check.worst_deviation));
    }
  }
  return implement_via_qram(a.n, a.m);
}

}  // namespace qsynth
