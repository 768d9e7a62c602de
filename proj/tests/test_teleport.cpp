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

#include "qsynth/error.hpp"
#include "qsynth/teleport.hpp"
#include "support.hpp"

namespace qsynth {
namespace {

TEST(Teleport, PauliLabels) {
  const PauliLabel p{0b10, 0b01};
  EXPECT_EQ(p.str(2), "1001");
  EXPECT_FALSE(p.is_identity());
  Matrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  EXPECT_LT((p.matrix(2) - kron(x, z)).norm(), 1e-15);
  EXPECT_TRUE(PauliLabel{}.is_identity());
  EXPECT_EQ(PauliLabel{}.str(1), "00");
}

TEST(Teleport, ZOnPlusAlwaysGivesMinus) {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  const double r = 1 / std::sqrt(2.0);
  const StateVector plus = StateVector::from_amplitudes({r, r});
  const StateVector minus = StateVector::from_amplitudes({r, -r});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const TeleportTrace t = teleport_synthesize(z, plus, seed);
    EXPECT_GE(fidelity(t.final_state, minus), 1 - 1e-12);
    ASSERT_EQ(t.rounds, t.corrections.size());
    EXPECT_TRUE(t.corrections.back().is_identity());
    for (std::size_t i = 0; i + 1 < t.corrections.size(); ++i) EXPECT_FALSE(t.corrections[i].is_identity());
  }
}

TEST(Teleport, DeterministicPerSeed) {
  Rng rng(51);
  const Matrix u = random_unitary(2, rng);
  const StateVector psi = random_state(2, rng);
  const TeleportTrace a = teleport_synthesize(u, psi, 7);
  const TeleportTrace b = teleport_synthesize(u, psi, 7);
  ASSERT_EQ(a.rounds, b.rounds);
  for (std::size_t i = 0; i < a.rounds; ++i) EXPECT_EQ(a.corrections[i].str(2), b.corrections[i].str(2));
  EXPECT_EQ(a.final_state.amplitudes(), b.final_state.amplitudes());
}

TEST(Teleport, RoundCap) {
  EXPECT_EQ(default_round_cap(1), 256U);
  EXPECT_EQ(default_round_cap(2), 1024U);
  Rng rng(52);
  const Matrix u = random_unitary(1, rng);
  // Some seed must need more than one round; the cap of 1 then trips.
  bool tripped = false;
  for (std::uint64_t seed = 0; seed < 50 && !tripped; ++seed) {
    try {
      teleport_synthesize(u, StateVector(1), seed, 1);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::RoundCapExceeded);
      tripped = true;
    }
  }
  EXPECT_TRUE(tripped);
}

// Property: zero error on every trial, per-round success frequency 4^{-n},
// rounds geometric with mean 4^n.
TEST(TeleportProperty, RoundStatisticsAndExactness) {
  for (std::size_t n = 1; n <= 2; ++n) {
    Rng rng(53 + n);
    const Matrix u = random_unitary(n, rng);
    const StateVector psi = random_state(n, rng);
    StateVector want(n);
    const Vector uv = u * Eigen::Map<const Vector>(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) want[i] = uv(static_cast<Eigen::Index>(i));
    const int trials = 2000;
    double rounds = 0;
    double worst = 1;
    for (int s = 0; s < trials; ++s) {
      const TeleportTrace t = teleport_synthesize(u, psi, static_cast<std::uint64_t>(s));
      rounds += static_cast<double>(t.rounds);
      worst = std::min(worst, fidelity(t.final_state, want));
    }
    const double p = std::pow(4.0, -static_cast<double>(n));
    const double mean = rounds / trials;
    const double freq = trials / rounds;
    EXPECT_GE(worst, 1 - 1e-9);
    EXPECT_TRUE(testing::within_sigma(mean, 1 / p, std::sqrt((1 - p) / (p * p) / trials), 3)) << mean;
    EXPECT_TRUE(testing::within_sigma(freq, p, std::sqrt(p * (1 - p) / rounds), 3)) << freq;
  }
}

}  // namespace
}  // namespace qsynth
