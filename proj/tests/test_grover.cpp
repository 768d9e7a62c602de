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

#include <gtest/gtest.h>

#include <numbers>

#include "qsynth/error.hpp"
#include "qsynth/grover.hpp"
#include "qsynth/resources.hpp"
#include "support.hpp"

namespace qsynth {
namespace {

std::size_t expected_iterations(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(std::numbers::pi / 4 * std::sqrt(std::pow(2.0, static_cast<double>(n)))));
}

std::size_t oracle_calls(const CircuitIR& c) {
  std::size_t k = 0;
  for (const auto& layer : c.layers()) {
    for (const Gate& g : layer) k += g.kind == GateKind::OracleCall;
  }
  return k;
}

TEST(Grover, ParamsFollowClosedForm) {
  // t = ceil(pi/4 * 2^{n/2}) by hand for small n.
  const std::size_t hand[] = {0, 2, 2, 3, 4, 5, 7, 9, 13, 18, 26};
  for (std::size_t n = 1; n <= 10; ++n) {
    const GroverParams g = grover_params(n);
    EXPECT_EQ(g.t, hand[n]) << n;
    EXPECT_EQ(g.t, expected_iterations(n));
    EXPECT_GT(g.p, 0.0);
    EXPECT_LE(g.p, 1.0);
  }
  EXPECT_THROW(grover_params(0), Error);
}

// Property: (2t + 1) theta = pi/2, and theta is the angle of the marked
// amplitude sqrt(p / 2^n).
TEST(GroverProperty, AngleIdentity) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const GroverParams g = grover_params(n);
    EXPECT_NEAR(static_cast<double>(2 * g.t + 1) * g.theta, std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(std::asin(std::sqrt(g.p / std::pow(2.0, static_cast<double>(n)))), g.theta, 1e-12);
  }
}

// Property: every built circuit makes exactly t oracle calls.
TEST(GroverProperty, QueryCountExactness) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const CircuitIR c = build_exact_grover(n);
    EXPECT_EQ(oracle_calls(c), expected_iterations(n));
    EXPECT_EQ(report(c).queries(), expected_iterations(n));
    EXPECT_EQ(c.depth(), 4 * expected_iterations(n) + 2);
    EXPECT_EQ(c.gate_class(), GateClass::Oracle);
    EXPECT_EQ(oracle_calls(build_reverse_grover(n)), expected_iterations(n));
  }
}

// Property: the diffusion sub-circuit is 2|psi0><psi0| - I with
// |psi0> = H^n|0> (x) (sqrt(1-p)|0> + sqrt(p)|1>).
TEST(GroverProperty, DiffusionMatchesRankOneReflection) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const GroverParams g = grover_params(n);
    const Eigen::Index dim = Eigen::Index{1} << (n + 1);
    Vector psi0(dim);
    const double u = 1 / std::sqrt(std::pow(2.0, static_cast<double>(n)));
    for (Eigen::Index i = 0; i < dim; ++i) psi0(i) = u * ((i & 1) ? std::sqrt(g.p) : std::sqrt(1 - g.p));
    const Matrix expect = 2.0 * psi0 * psi0.adjoint() - Matrix::Identity(dim, dim);
    const Matrix got = circuit_as_matrix(build_diffusion(n));
    EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
  }
}

TEST(Grover, OracleIsReflectionAboutMarkedFlag) {
  MarkedReflectionOracle o(3, BitString::parse("101"));
  Matrix expect = Matrix::Identity(16, 16);
  expect(0b1011, 0b1011) = -1;
  EXPECT_LT((o.matrix() - expect).norm(), 1e-15);
}

TEST(Grover, NTwoMarkedEleven) {
  MarkedReflectionOracle o(2, BitString::parse("11"));
  const GroverRun r = run_exact_grover(2, o);
  EXPECT_EQ(r.found.str(), "11");
  EXPECT_EQ(r.queries, 2U);
  EXPECT_GE(r.fidelity, 0.999999999);
}

TEST(Grover, ExhaustiveUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      MarkedReflectionOracle o(n, BitString{n, x});
      const GroverRun r = run_exact_grover(n, o);
      EXPECT_EQ(r.found.value, x);
      EXPECT_EQ(r.queries, expected_iterations(n));
      EXPECT_GE(r.fidelity, 1 - 1e-9) << "n=" << n << " x=" << x;
      EXPECT_EQ(o.counter().backward, 0U);
    }
  }
}

TEST(Grover, ReverseReturnsMarkedToZero) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t x = (std::uint64_t{1} << n) - 2 + (n == 1);
    MarkedReflectionOracle o(n, BitString{n, x});
    StateVector s(n + 1, x << 1);
    apply_circuit(s, build_reverse_grover(n), {{kMarkedOracle, o.binding()}});
    EXPECT_GE(std::norm(s[0]), 1 - 1e-9);
  }
}

TEST(Grover, CountersArePerOracle) {
  MarkedReflectionOracle a(2, BitString::parse("01"));
  MarkedReflectionOracle b(2, BitString::parse("01"));
  run_exact_grover(2, a);
  EXPECT_EQ(a.query_count(), 2U);
  EXPECT_EQ(b.query_count(), 0U);
  EXPECT_THROW(run_exact_grover(3, a), Error);
}

}  // namespace
}  // namespace qsynth
