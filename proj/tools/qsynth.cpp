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

// qsynth command-line front end. Every command prints one JSON document on
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input.

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "qsynth/amplitude_tree.hpp"
#include "qsynth/bit_oracle.hpp"
#include "qsynth/error.hpp"
#include "qsynth/grover.hpp"
#include "qsynth/io.hpp"
#include "qsynth/qram.hpp"
#include "qsynth/resources.hpp"
#include "qsynth/simulate.hpp"
#include "qsynth/state_circuit.hpp"
#include "qsynth/teleport.hpp"
#include "qsynth/unitsynth.hpp"

namespace {

using namespace qsynth;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kMalformed = 2;

struct Options {
  bool pretty = false;
  std::string state_path, unitary_path, circuit_path, input_path;
  std::string method;
  std::string qram_kind = "functional";
  std::size_t precision_bits = 20;
  std::uint64_t seed = 0;
  std::size_t round_cap = 0;
  double tol = 1e-9;
  bool lowered = false;
  std::size_t n = 0;
  std::string marked;
  bool reverse = false;
  std::string range = "2..8";
  std::string methods = "grover,qram-grover,qacf0,qnc,depth";
};

Json load_json(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "field '" + field + "': cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "field '" + field + "': " + path + " is not JSON (" + e.what() + ")");
  }
}

// Accepts either a bare document or a command envelope holding it under `key`.
const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key) && j.contains("format")) return j[key];
  return j;
}

Matrix load_unitary(const std::string& path) {
  const Json j = load_json(path, "unitary");
  Matrix u = unitary_from_json(unwrap(j, "unitary"));
  if (!is_unitary(u, 1e-8)) throw Error(ErrorCode::NonUnitaryInput, "field 'unitary': matrix is not unitary");
  return u;
}

StateVector load_state(const std::string& path, const char* field) {
  const Json j = load_json(path, field);
  try {
    return state_from_json(unwrap(j, "state"));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + field + "': " + e.what());
  }
}

struct LoadedCircuit {
  CircuitIR circuit;
  Bindings bindings;
  OracleCosts costs;
};

LoadedCircuit load_circuit(const std::string& path) {
  const Json j = load_json(path, "circuit");
  const Json& c = unwrap(j, "circuit");
  LoadedCircuit out{circuit_from_json(c), {}, {}};
  if (auto it = c.find("oracles"); it != c.end()) {
    out.bindings = bindings_from_json(*it);
    for (const auto& [id, entry] : it->items()) {
      if (entry.value("type", "") == "circuit") out.costs[id] = report(circuit_from_json(entry.at("circuit")));
    }
  }
  return out;
}

Json envelope(const char* command) { return Json{{"format", 1}, {"command", command}}; }

// Circuit document with its oracle definitions embedded for later replay.
Json circuit_doc(const CircuitIR& c, Json oracles = Json::object()) {
  Json j = circuit_to_json(c);
  if (!oracles.empty()) j["oracles"] = std::move(oracles);
  return j;
}

BitString parse_bits(const std::string& text, std::size_t n, const char* field) {
  if (text.size() != n || text.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::ParseError, std::string("field '") + field + "': expected " + std::to_string(n) + " bits");
  }
  return BitString::parse(text);
}

std::size_t qubits_of(const Matrix& u) {
  return static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(u.rows())));
}

// --- commands ---------------------------------------------------------------

int synthesize_state(const Options& o, Json& out) {
  const StateVector psi = load_state(o.state_path, "state");
  const std::size_t n = psi.num_qubits();
  out["method"] = o.method;
  if (o.method == "oracle") {
    const ClassicalBitOracle table = beta_oracle(psi, o.precision_bits);
    const OracleSynthesis s = oracle_state_synth(n, table);
    out["oracle"] = oracle_table_to_json(table);
    out["queries"] = s.queries;
    out["trace_distance"] = trace_distance(s.state, psi);
    return kOk;
  }
  const CircuitIR c = o.method == "qacf0" ? build_qacf0_state_circuit(psi) : build_qnc_state_circuit(psi);
  out["circuit"] = circuit_doc(c);
  out["report"] = report_to_json(report(c));
  return kOk;
}

int synthesize_unitary(const Options& o, Json& out) {
  const Matrix u = load_unitary(o.unitary_path);
  const std::size_t n = qubits_of(u);
  out["method"] = o.method;
  if (o.method == "qram-grover") {
    if (o.qram_kind == "functional") {
      const CircuitIR c = implement_via_qram(functional_qram(u));
      out["circuit"] = circuit_doc(c, {{kQramOracle, {{"type", "functional-qram"}, {"unitary", unitary_to_json(u)}}}});
      out["report"] = report_to_json(report(c));
    } else {
      const GateLevelQram gl = build_gate_level_qram(u);
      const CircuitIR c = implement_via_qram(circuit_qram(gl.circuit, n, u), false);
      out["circuit"] = circuit_doc(c, {{kQramOracle, {{"type", "circuit"}, {"circuit", circuit_to_json(gl.circuit)}}}});
      out["report"] = report_to_json(report(c, {{kQramOracle, report(gl.circuit)}}));
    }
  } else if (o.method == "depth") {
    const DepthSynthesis d = depth_synthesize(u);
    out["circuit"] = circuit_doc(d.circuit, {{kQramOracle, {{"type", "circuit"}, {"circuit", circuit_to_json(*d.qram.circuit)}}}});
    out["report"] = report_to_json(d.report);
  } else if (o.method == "oracle") {
    const OracleUnitarySynthesis s = oracle_synthesize(u, o.precision_bits);
    out["circuit"] = circuit_doc(
        s.circuit, {{kQramOracle, {{"type", "classical-qram"}, {"n", n}, {"table", oracle_table_to_json(s.oracle)}}}});
    out["report"] = report_to_json(report(s.circuit));
    out["distance"] = s.distance;
    out["classical_queries"] = s.classical_queries;
  } else {
    const StateVector psi = o.input_path.empty() ? StateVector(n) : load_state(o.input_path, "input");
    if (psi.num_qubits() != n) throw Error(ErrorCode::ParseError, "field 'input': width differs from the unitary");
    const TeleportTrace t = teleport_synthesize(u, psi, o.seed, o.round_cap);
    Json corr = Json::array();
    for (const PauliLabel& p : t.corrections) corr.push_back(p.str(n));
    out["seed"] = o.seed;
    out["rounds"] = t.rounds;
    out["corrections"] = std::move(corr);
    out["fidelity"] = t.fidelity;
  }
  return kOk;
}

int simulate_cmd(const Options& o, Json& out) {
  const LoadedCircuit lc = load_circuit(o.circuit_path);
  const std::size_t w = lc.circuit.num_qubits();
  const SimulationLimits limits = SimulationLimits::from_env();
  if (w > limits.matrix_qubits) {
    throw Error(ErrorCode::TooManyQubits, std::to_string(w) + " qubits exceed the simulation cap of " +
                                              std::to_string(limits.matrix_qubits) + " (set QSYNTH_SIM_CAP)");
  }
  StateVector in(w);
  if (!o.state_path.empty()) {
    // The given state fills the leading qubits; the rest start in |0>.
    const StateVector psi = load_state(o.state_path, "state");
    if (psi.num_qubits() > w) throw Error(ErrorCode::ParseError, "field 'state': wider than the circuit");
    const std::size_t shift = w - psi.num_qubits();
    for (std::size_t i = 0; i < psi.size(); ++i) in[i << shift] = psi[i];
  }
  const SimulationResult r = simulate(in, lc.circuit, lc.bindings);
  out["state"] = state_to_json(r.state);
  out["report"] = report_to_json(r.report);
  return kOk;
}

int verify_cmd(const Options& o, Json& out) {
  const LoadedCircuit lc = load_circuit(o.circuit_path);
  const Matrix u = load_unitary(o.unitary_path);
  const double d = implementation_distance(lc.circuit, lc.bindings, u);
  const bool ok = d <= o.tol;
  out["distance"] = d;
  out["tol"] = o.tol;
  out["ok"] = ok;
  return ok ? kOk : kVerifyFailed;
}

int stats_cmd(const Options& o, Json& out) {
  const LoadedCircuit lc = load_circuit(o.circuit_path);
  out["lowered"] = o.lowered;
  out["report"] = report_to_json(o.lowered ? lowered_report(lc.circuit, lc.costs) : report(lc.circuit, lc.costs));
  return kOk;
}

int grover_cmd(const Options& o, Json& out) {
  if (o.n == 0 || o.n > 20) throw Error(ErrorCode::ParseError, "field 'n': expected 1..20");
  const BitString marked = parse_bits(o.marked, o.n, "marked");
  MarkedReflectionOracle oracle(o.n, marked);
  if (!o.reverse) {
    const GroverRun run = run_exact_grover(o.n, oracle);
    out["found"] = run.found.str();
    out["queries"] = run.queries;
    out["fidelity"] = run.fidelity;
    return kOk;
  }
  // Reverse search: start from |x>|0> and expect |0...0>.
  const CircuitIR c = build_reverse_grover(o.n);
  StateVector s(o.n + 1, marked.value << 1);
  apply_circuit(s, c, {{kMarkedOracle, oracle.binding()}});
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (std::norm(s[i]) > std::norm(s[best])) best = i;
  }
  out["reverse"] = true;
  out["found"] = BitString{o.n, best >> 1}.str();
  out["queries"] = oracle.query_count();
  out["fidelity"] = std::norm(s[0]);
  return kOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto bad = [&]() { return Error(ErrorCode::ParseError, "field 'n': expected N or A..B, got '" + text + "'"); };
  std::size_t a = 0, b = 0;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      a = b = std::stoul(text, &used);
      if (used != text.size()) throw bad();
    } else {
      a = std::stoul(text.substr(0, dots), &used);
      if (used != dots) throw bad();
      const std::string rest = text.substr(dots + 2);
      b = std::stoul(rest, &used);
      if (used != rest.size()) throw bad();
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (a == 0 || a > b || b > 16) throw bad();
  return {a, b};
}

Json bench_row(const std::string& method, std::size_t n, std::uint64_t seed) {
  Json row{{"method", method}, {"n", n}};
  Rng rng(seed + n);
  ResourceReport r;
  std::optional<double> distance;
  if (method == "grover") {
    const CircuitIR c = build_exact_grover(n);
    r = report(c);
    if (n <= 10) {
      MarkedReflectionOracle oracle(n, BitString{n, 0});
      distance = std::max(0.0, 1.0 - run_exact_grover(n, oracle).fidelity);
    }
  } else if (method == "qram-grover") {
    if (n <= 3) {
      const Matrix u = random_unitary(n, rng);
      const QramOracle a = functional_qram(u);
      const CircuitIR c = implement_via_qram(a, false);
      r = report(c);
      distance = implementation_distance(c, {{kQramOracle, a.binding()}}, u);
    } else {
      r = report(implement_via_qram(n, n));
    }
  } else if (method == "qacf0" || method == "qnc") {
    const StateVector psi = random_state(n, rng);
    r = report(method == "qacf0" ? build_qacf0_state_circuit(psi) : build_qnc_state_circuit(psi));
    if (n <= 4) distance = std::max(0.0, 1.0 - fidelity(compact_state_synthesis(amplitude_tree(psi)).output, psi));
  } else if (method == "depth") {
    if (n <= 2) {
      const Matrix u = random_unitary(n, rng);
      const DepthSynthesis d = depth_synthesize(u);
      r = d.report;
      distance = implementation_distance(d.circuit, {{kQramOracle, d.qram.binding()}}, u);
    } else {
      r = depth_synthesis_report(n, seed + n);
    }
  } else {
    throw Error(ErrorCode::ParseError, "field 'methods': unknown method '" + method + "'");
  }
  row["depth"] = r.depth;
  row["size"] = r.size;
  row["ancillae"] = r.ancillae;
  row["queries"] = r.queries();
  row["distance"] = distance ? Json(*distance) : Json(nullptr);
  return row;
}

// Aligned text rendering of the bench table (stderr, for humans).
void print_table(const Json& rows) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "method" << std::right << std::setw(4) << "n" << std::setw(10) << "depth"
     << std::setw(12) << "size" << std::setw(10) << "ancillae" << std::setw(9) << "queries" << std::setw(13)
     << "distance" << '\n';
  for (const Json& r : rows) {
    os << std::left << std::setw(12) << r["method"].get<std::string>() << std::right << std::setw(4)
       << r["n"].get<std::size_t>() << std::setw(10) << r["depth"].get<std::size_t>() << std::setw(12)
       << r["size"].get<std::size_t>() << std::setw(10) << r["ancillae"].get<std::size_t>() << std::setw(9)
       << r["queries"].get<std::size_t>() << std::setw(13);
    if (r["distance"].is_null()) {
      os << "-";
    } else {
      os << std::scientific << std::setprecision(2) << r["distance"].get<double>() << std::defaultfloat;
    }
    os << '\n';
  }
  std::cerr << os.str();
}

int bench_cmd(const Options& o, Json& out) {
  std::vector<std::string> methods;
  std::stringstream ss(o.methods);
  for (std::string m; std::getline(ss, m, ',');) {
    if (!m.empty()) methods.push_back(m);
  }
  const auto [lo, hi] = parse_range(o.range);
  Json rows = Json::array();
  for (const std::string& m : methods) {
    for (std::size_t n = lo; n <= hi; ++n) rows.push_back(bench_row(m, n, o.seed));
  }
  print_table(rows);
  out["seed"] = o.seed;
  out["rows"] = std::move(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsynth: quantum state and unitary synthesis"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* ss = app.add_subcommand("synthesize-state", "Circuit or oracle table preparing a state");
  ss->add_option("--state", o.state_path, "State JSON")->required();
  ss->add_option("--method", o.method)->required()->check(CLI::IsMember({"qacf0", "qnc", "oracle"}));
  ss->add_option("--precision-bits", o.precision_bits)->check(CLI::Range(2, 62));

  auto* su = app.add_subcommand("synthesize-unitary", "Circuit implementing a unitary");
  su->add_option("--unitary", o.unitary_path, "Unitary JSON")->required();
  su->add_option("--method", o.method)
      ->required()
      ->check(CLI::IsMember({"qram-grover", "oracle", "depth", "teleport"}));
  su->add_option("--qram", o.qram_kind)->check(CLI::IsMember({"functional", "circuit"}));
  su->add_option("--precision-bits", o.precision_bits)->check(CLI::Range(2, 62));
  su->add_option("--seed", o.seed);
  su->add_option("--input", o.input_path, "Input state JSON (teleport)");
  su->add_option("--round-cap", o.round_cap, "Teleport round limit (0: default)");

  auto* sim = app.add_subcommand("simulate", "Run a circuit on a state");
  sim->add_option("--circuit", o.circuit_path)->required();
  sim->add_option("--state", o.state_path, "Initial state of the leading qubits (default |0...0>)");

  auto* ver = app.add_subcommand("verify", "Check a circuit against a unitary");
  ver->add_option("--circuit", o.circuit_path)->required();
  ver->add_option("--unitary", o.unitary_path)->required();
  ver->add_option("--tol", o.tol)->check(CLI::NonNegativeNumber);

  auto* st = app.add_subcommand("stats", "Resource report of a circuit");
  st->add_option("--circuit", o.circuit_path)->required();
  st->add_flag("--lowered", o.lowered, "Report after lowering to one- and two-qubit gates");

  auto* gr = app.add_subcommand("grover", "Exact single-item search");
  gr->add_option("--n", o.n)->required();
  gr->add_option("--marked", o.marked)->required();
  gr->add_flag("--reverse", o.reverse);

  auto* be = app.add_subcommand("bench", "Resource table over a range of n");
  be->add_option("--n", o.range, "N or A..B")->capture_default_str();
  be->add_option("--methods", o.methods, "Comma-separated; empty for none")->capture_default_str();
  be->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Json out = envelope(cmd.c_str());
  int code = kOk;
  try {
    if (cmd == "synthesize-state") {
      code = synthesize_state(o, out);
    } else if (cmd == "synthesize-unitary") {
      code = synthesize_unitary(o, out);
    } else if (cmd == "simulate") {
      code = simulate_cmd(o, out);
    } else if (cmd == "verify") {
      code = verify_cmd(o, out);
    } else if (cmd == "stats") {
      code = stats_cmd(o, out);
    } else if (cmd == "grover") {
      code = grover_cmd(o, out);
    } else {
      code = bench_cmd(o, out);
    }
  } catch (const Error& e) {
    std::cerr << "qsynth: " << e.what() << '\n';
    return e.code() == ErrorCode::RoundCapExceeded ? kVerifyFailed : kMalformed;
  } catch (const Json::exception& e) {
    std::cerr << "qsynth: malformed JSON: " << e.what() << '\n';
    return kMalformed;
  }
  std::cout << (o.pretty ? out.dump(2) : out.dump()) << '\n';
  return code;
}
