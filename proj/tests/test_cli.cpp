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

// Drives the qsynth binary end to end.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "qsynth/io.hpp"
#include "qsynth/linalg.hpp"

#ifndef QSYNTH_CLI
#error "QSYNTH_CLI must point at the qsynth executable"
#endif

namespace qsynth {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Invocation run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QSYNTH_CLI + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write(const std::string& name, const Json& j) {
  const std::string path = ::testing::TempDir() + "qsynth_cli_" + name;
  std::ofstream(path) << j.dump();
  return path;
}

std::string write_text(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + "qsynth_cli_" + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, GroverExample) {
  const Invocation r = run("grover --n 2 --marked 11");
  ASSERT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(j["format"], 1);
  EXPECT_EQ(j["found"], "11");
  EXPECT_EQ(j["queries"], 2);
  EXPECT_GE(j["fidelity"].get<double>(), 0.999999999);
}

TEST(Cli, VerifyIdentity) {
  const std::string id = write("id.json", Json{{"num_qubits", 1}, {"gate_class", "QNC"}, {"layers", Json::array()}});
  const std::string eye = write("I.json", unitary_to_json(Matrix::Identity(2, 2)));
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  const std::string xs = write("X.json", unitary_to_json(x));
  EXPECT_EQ(run("verify --circuit " + id + " --unitary " + eye + " --tol 1e-9").code, 0);
  const Invocation fail = run("verify --circuit " + id + " --unitary " + xs + " --tol 1e-9");
  EXPECT_EQ(fail.code, 1);
  EXPECT_FALSE(fail.json()["ok"].get<bool>());
}

TEST(Cli, DepthCircuitStatsAndRoundTrip) {
  Rng rng(71);
  const std::string u = write("U2.json", unitary_to_json(random_unitary(2, rng)));
  const Invocation synth = run("synthesize-unitary --method depth --unitary " + u);
  ASSERT_EQ(synth.code, 0);
  const std::string c = write_text("depth.json", synth.out);
  const Invocation stats = run("stats --circuit " + c);
  ASSERT_EQ(stats.code, 0);
  EXPECT_EQ(stats.json()["report"]["queries"], 5);
  const Invocation lowered = run("stats --lowered --circuit " + c);
  EXPECT_EQ(lowered.json()["report"], synth.json()["report"]);
  // The embedded circuit re-parses to the same document.
  const Json doc = synth.json()["circuit"];
  Json again = circuit_to_json(circuit_from_json(doc));
  again["oracles"] = doc["oracles"];
  EXPECT_EQ(again, doc);
}

TEST(Cli, QramGroverVerifies) {
  Rng rng(72);
  const std::string u = write("U3.json", unitary_to_json(random_unitary(3, rng)));
  const Invocation synth = run("synthesize-unitary --method qram-grover --unitary " + u);
  ASSERT_EQ(synth.code, 0);
  EXPECT_EQ(synth.json()["report"]["queries"], 7);
  const std::string c = write_text("qg.json", synth.out);
  EXPECT_EQ(run("verify --tol 1e-8 --circuit " + c + " --unitary " + u).code, 0);
}

TEST(Cli, StateSynthesisAndSimulate) {
  const double r = 1 / std::sqrt(2.0);
  const std::string psi = write("bell.json", Json{{"num_qubits", 2}, {"amps", {{r, 0}, {0, 0}, {0, 0}, {r, 0}}}});
  const Invocation q = run("synthesize-state --method qacf0 --state " + psi);
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(q.json()["report"]["depth"], 23);
  const std::string c = write_text("bellc.json", q.out);
  EXPECT_EQ(run("simulate --circuit " + c).code, 2);  // 20 qubits exceed the default cap
  const Invocation sim = run("simulate --circuit " + c, "QSYNTH_SIM_CAP=20");
  ASSERT_EQ(sim.code, 0);
  const Json amps = sim.json()["state"]["amps"];
  EXPECT_NEAR(amps[0][0].get<double>(), r, 1e-12);
  EXPECT_NEAR(amps[std::size_t{3} << 18][0].get<double>(), r, 1e-12);
  const Invocation o = run("synthesize-state --method oracle --precision-bits 16 --state " + psi);
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["oracle"]["precision_bits"], 16);
  EXPECT_LE(o.json()["trace_distance"].get<double>(), 1e-3);
}

TEST(Cli, TeleportIsDeterministic) {
  Rng rng(73);
  const std::string u = write("T.json", unitary_to_json(random_unitary(2, rng)));
  const Invocation a = run("synthesize-unitary --method teleport --seed 5 --unitary " + u);
  const Invocation b = run("synthesize-unitary --method teleport --seed 5 --unitary " + u);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["rounds"], a.json()["corrections"].size());
  EXPECT_EQ(run("synthesize-unitary --method teleport --unitary " + u).json()["seed"], 0);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run("grover --n 2 --marked 11 --frobnicate").code, 2);
  EXPECT_EQ(run("grover --n 2").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("stats --circuit /nonexistent.json").code, 2);
  EXPECT_EQ(run("stats --circuit " + write_text("junk.json", "{not json")).code, 2);
  EXPECT_EQ(run("stats --circuit " + write("nolayers.json", Json{{"num_qubits", 1}, {"gate_class", "QNC"}})).code, 2);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = 2;
  EXPECT_EQ(run("synthesize-unitary --method depth --unitary " + write("bad.json", unitary_to_json(bad))).code, 2);
  EXPECT_EQ(run("bench --n 3..x").code, 2);
  EXPECT_EQ(run("bench --methods warp").code, 2);
}

TEST(Cli, PrettyIsIndentedJson) {
  const Invocation r = run("--pretty grover --n 1 --marked 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n  \"format\": 1"), std::string::npos);
  EXPECT_EQ(r.json()["found"], "1");
}

TEST(Cli, BenchEmptyAndGrover) {
  const Invocation empty = run("bench --methods ''");
  ASSERT_EQ(empty.code, 0);
  EXPECT_TRUE(empty.json()["rows"].empty());
  const Invocation g = run("bench --methods grover --n 1..10");
  ASSERT_EQ(g.code, 0);
  const Json rows = g.json()["rows"];
  ASSERT_EQ(rows.size(), 10U);
  for (std::size_t i = 0; i < 10; ++i) {
    const double n = static_cast<double>(i + 1);
    EXPECT_EQ(rows[i]["n"], i + 1);
    EXPECT_EQ(rows[i]["queries"], static_cast<int>(std::ceil(std::numbers::pi / 4 * std::pow(2.0, n / 2))));
  }
  EXPECT_EQ(g.out, run("bench --methods grover --n 1..10").out);
}

TEST(Cli, BenchDepthScaling) {
  const Invocation r = run("bench --methods depth --n 2..8");
  ASSERT_EQ(r.code, 0);
  const Json rows = r.json()["rows"];
  ASSERT_EQ(rows.size(), 7U);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i]["depth"], rows[i - 1]["depth"]);
  const double ratio = rows[6]["depth"].get<double>() / rows[4]["depth"].get<double>();
  EXPECT_NEAR(ratio, 2.0, 0.6);
  EXPECT_LE(rows[0]["distance"].get<double>(), 1e-8);
}

}  // namespace
}  // namespace qsynth
