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

#include "qsynth/io.hpp"

#include <bit>

#include "qsynth/error.hpp"
#include "qsynth/grover.hpp"
#include "qsynth/qram.hpp"
#include "qsynth/unitsynth.hpp"

namespace qsynth {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + why);
}

const Json& need(const Json& j, const std::string& key) {
  if (!j.is_object()) fail(key, "parent is not an object");
  auto it = j.find(key);
  if (it == j.end()) fail(key, "missing");
  return *it;
}

std::size_t need_uint(const Json& j, const std::string& key) {
  const Json& v = need(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail(key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(field, "expected [re, im]");
  }
  const Complex c(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) fail(field, "non-finite amplitude");
  return c;
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::OneQubit: return "one_qubit";
    case GateKind::TwoQubit: return "two_qubit";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::Fanout: return "fanout";
    case GateKind::BasisReflection: return "basis_reflection";
    case GateKind::OracleCall: return "oracle_call";
  }
  return "?";
}

std::vector<Qubit> targets_from_json(const Json& j) {
  const Json& t = need(j, "targets");
  if (!t.is_array()) fail("targets", "expected an array");
  std::vector<Qubit> out;
  for (const Json& q : t) {
    if (!q.is_number_unsigned() && !(q.is_number_integer() && q.get<long long>() >= 0)) {
      fail("targets", "expected qubit indices");
    }
    out.push_back(q.get<Qubit>());
  }
  return out;
}

}  // namespace

Json gate_to_json(const Gate& g) {
  Json j;
  j["kind"] = kind_name(g.kind);
  j["targets"] = g.targets;
  if (g.kind == GateKind::OneQubit || g.kind == GateKind::TwoQubit) {
    Json m = Json::array();
    for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
      for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) m.push_back(complex_to_json(g.matrix(r, c)));
    }
    j["matrix"] = std::move(m);
  } else if (g.kind == GateKind::BasisReflection) {
    std::string p;
    for (bool b : g.pattern) p.push_back(b ? '1' : '0');
    j["pattern"] = p;
  } else if (g.kind == GateKind::OracleCall) {
    j["oracle"] = g.oracle;
    j["direction"] = g.direction == Direction::Forward ? "forward" : "backward";
  }
  return j;
}

Gate gate_from_json(const Json& j) {
  const Json& kind = need(j, "kind");
  if (!kind.is_string()) fail("kind", "expected a string");
  const std::string k = kind.get<std::string>();
  std::vector<Qubit> t = targets_from_json(j);
  try {
    if (k == "one_qubit" || k == "two_qubit") {
      const std::size_t dim = k == "one_qubit" ? 2 : 4;
      const Json& m = need(j, "matrix");
      if (!m.is_array() || m.size() != dim * dim) fail("matrix", "expected " + std::to_string(dim * dim) + " entries");
      GateMatrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
      for (std::size_t i = 0; i < dim * dim; ++i) {
        g(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) = complex_from_json(m[i], "matrix");
      }
      if (k == "one_qubit") {
        if (t.size() != 1) fail("targets", "one_qubit takes one target");
        return Gate::one_qubit(t[0], g);
      }
      if (t.size() != 2) fail("targets", "two_qubit takes two targets");
      return Gate::two_qubit(t[0], t[1], g);
    }
    if (k == "toffoli" || k == "fanout") {
      if (t.size() < 2) fail("targets", k + " needs at least two qubits");
      std::vector<Qubit> rest(t.begin() + 1, t.end());
      return k == "toffoli" ? Gate::toffoli(t[0], std::move(rest)) : Gate::fanout(t[0], std::move(rest));
    }
    if (k == "basis_reflection") {
      const Json& p = need(j, "pattern");
      if (!p.is_string()) fail("pattern", "expected a bit string");
      std::vector<bool> bits;
      for (char c : p.get<std::string>()) {
        if (c != '0' && c != '1') fail("pattern", "expected only 0 and 1");
        bits.push_back(c == '1');
      }
      return Gate::basis_reflection(std::move(t), std::move(bits));
    }
    if (k == "oracle_call") {
      const Json& id = need(j, "oracle");
      if (!id.is_string()) fail("oracle", "expected a string");
      Direction dir = Direction::Forward;
      if (auto it = j.find("direction"); it != j.end()) {
        if (*it == "backward") {
          dir = Direction::Backward;
        } else if (*it != "forward") {
          fail("direction", "expected forward or backward");
        }
      }
      return Gate::oracle_call(id.get<std::string>(), std::move(t), dir);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail("gate", e.what());
  }
  fail("kind", "unknown gate kind '" + k + "'");
}

Json circuit_to_json(const CircuitIR& c) {
  Json j;
  j["num_qubits"] = c.num_qubits();
  j["gate_class"] = to_string(c.gate_class());
  Json regs = Json::object();
  for (const auto& [name, r] : c.registers()) regs[name] = Json::array({r.start, r.length});
  j["registers"] = std::move(regs);
  Json layers = Json::array();
  for (const auto& layer : c.layers()) {
    Json l = Json::array();
    for (const Gate& g : layer) l.push_back(gate_to_json(g));
    layers.push_back(std::move(l));
  }
  j["layers"] = std::move(layers);
  return j;
}

CircuitIR circuit_from_json(const Json& j) {
  const std::size_t nq = need_uint(j, "num_qubits");
  const Json& cls = need(j, "gate_class");
  if (!cls.is_string()) fail("gate_class", "expected a string");
  GateClass gc{};
  try {
    gc = gate_class_from_string(cls.get<std::string>());
  } catch (const Error&) {
    fail("gate_class", "expected QNC, QACf0 or ORACLE");
  }
  CircuitIR c(nq, gc);
  if (auto it = j.find("registers"); it != j.end()) {
    if (!it->is_object()) fail("registers", "expected an object");
    for (const auto& [name, r] : it->items()) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() || !r[1].is_number_unsigned()) {
        fail("registers." + name, "expected [start, length]");
      }
      c.set_register(name, Register{r[0].get<Qubit>(), r[1].get<std::size_t>()});
    }
  }
  const Json& layers = need(j, "layers");
  if (!layers.is_array()) fail("layers", "expected an array");
  for (const Json& l : layers) {
    if (!l.is_array()) fail("layers", "each layer must be an array");
    std::vector<Gate> gates;
    for (const Json& g : l) gates.push_back(gate_from_json(g));
    try {
      c.add_layer(std::move(gates));
    } catch (const Error& e) {
      fail("layers", e.what());
    }
  }
  if (c.num_qubits() != nq) fail("num_qubits", "a gate addresses a qubit beyond num_qubits");
  return c;
}

Json state_to_json(const StateVector& s) {
  Json amps = Json::array();
  for (Complex a : s.amplitudes()) amps.push_back(complex_to_json(a));
  return Json{{"num_qubits", s.num_qubits()}, {"amps", std::move(amps)}};
}

StateVector state_from_json(const Json& j) {
  const std::size_t n = need_uint(j, "num_qubits");
  const Json& amps = need(j, "amps");
  if (n == 0 || n > 30) fail("num_qubits", "expected 1..30");
  if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) fail("amps", "expected 2^num_qubits entries");
  std::vector<Complex> v;
  v.reserve(amps.size());
  for (const Json& a : amps) v.push_back(complex_from_json(a, "amps"));
  StateVector s = StateVector::from_amplitudes(std::move(v));
  if (!s.is_normalized()) fail("amps", "state is not normalized");
  return s;
}

Json unitary_to_json(const Matrix& u) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < u.cols(); ++c) row.push_back(complex_to_json(u(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix unitary_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("unitary", "expected nested rows of [re, im]");
  const std::size_t dim = j.size();
  if (dim < 2 || !std::has_single_bit(dim)) fail("unitary", "dimension must be a power of two >= 2");
  Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) fail("unitary", "row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < dim; ++c) {
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c], "unitary");
    }
  }
  return u;
}

Json oracle_table_to_json(const ClassicalBitOracle& o) {
  Json entries = Json::object();
  for (const auto& [addr, value] : o.entries) {
    std::vector<bool> abits;
    for (std::size_t i = 0; i < o.address_bits; ++i) abits.push_back((addr >> (o.address_bits - 1 - i)) & 1U);
    entries[bits_to_hex(abits)] = bits_to_hex(value);
  }
  return Json{{"n", o.address_bits}, {"precision_bits", o.precision_bits}, {"entries", std::move(entries)}};
}

ClassicalBitOracle oracle_table_from_json(const Json& j) {
  ClassicalBitOracle o;
  o.address_bits = need_uint(j, "n");
  o.precision_bits = need_uint(j, "precision_bits");
  if (o.address_bits == 0 || o.address_bits > 60) fail("n", "expected 1..60");
  if (o.precision_bits < 2 || o.precision_bits > 62) fail("precision_bits", "expected 2..62");
  const Json& entries = need(j, "entries");
  if (!entries.is_object()) fail("entries", "expected an object");
  for (const auto& [key, value] : entries.items()) {
    if (!value.is_string()) fail("entries." + key, "expected a hex string");
    try {
      const std::vector<bool> abits = hex_to_bits(key, o.address_bits);
      std::uint64_t addr = 0;
      for (bool b : abits) addr = (addr << 1) | (b ? 1U : 0U);
      o.entries[addr] = hex_to_bits(value.get<std::string>(), o.value_width());
    } catch (const Error& e) {
      fail("entries." + key, e.what());
    }
  }
  return o;
}

Json report_to_json(const ResourceReport& r) {
  return Json{{"depth", r.depth},
              {"size", r.size},
              {"ancillae", r.ancillae},
              {"num_qubits", r.num_qubits},
              {"forward_queries", r.forward_queries},
              {"backward_queries", r.backward_queries},
              {"queries", r.queries()}};
}

Bindings bindings_from_json(const Json& oracles) {
  Bindings out;
  if (oracles.is_null()) return out;
  if (!oracles.is_object()) fail("oracles", "expected an object");
  for (const auto& [id, entry] : oracles.items()) {
    const std::string field = "oracles." + id;
    const Json& type = need(entry, "type");
    if (!type.is_string()) fail(field + ".type", "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "unitary") {
      out[id] = matrix_binding(unitary_from_json(need(entry, "matrix")));
    } else if (t == "circuit") {
      Bindings inner;
      if (auto it = entry.find("oracles"); it != entry.end()) inner = bindings_from_json(*it);
      out[id] = circuit_binding(circuit_from_json(need(entry, "circuit")), std::move(inner));
    } else if (t == "marked") {
      const std::size_t n = need_uint(entry, "n");
      const Json& m = need(entry, "marked");
      if (!m.is_string() || m.get<std::string>().size() != n) fail(field + ".marked", "expected an n-bit string");
      out[id] = MarkedReflectionOracle(n, BitString::parse(m.get<std::string>())).binding();
    } else if (t == "functional-qram") {
      out[id] = functional_qram(unitary_from_json(need(entry, "unitary"))).binding();
    } else if (t == "classical-qram") {
      out[id] = classical_qram(oracle_table_from_json(need(entry, "table")), need_uint(entry, "n")).binding();
    } else {
      fail(field + ".type", "unknown oracle type '" + t + "'");
    }
  }
  return out;
}

}  // namespace qsynth
