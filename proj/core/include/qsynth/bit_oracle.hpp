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

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qsynth/grover.hpp"
#include "qsynth/qram.hpp"
#include "qsynth/state.hpp"

namespace qsynth {

/// Signed fixed point: one sign bit then b magnitude bits, value = mag/(2^b-1).
struct FixedPoint {
  std::size_t bits = 0;

  std::size_t width() const { return bits + 1; }
  std::uint64_t encode(double v) const;
  double decode(std::uint64_t word) const;
};

/// Address -> bit string table. Each value packs re(b0), im(b0), re(b1),
/// im(b1) of one tree node, most significant field first.
struct ClassicalBitOracle {
  std::size_t address_bits = 0;
  std::size_t precision_bits = 0;
  std::map<std::uint64_t, std::vector<bool>> entries;
  std::shared_ptr<QueryCounter> counter = std::make_shared<QueryCounter>();

  std::size_t value_width() const { return 4 * (precision_bits + 1); }
  std::size_t total_bits() const { return entries.size() * value_width(); }
  /// All-zero value for absent addresses.
  std::vector<bool> lookup(std::uint64_t address) const;
  std::array<Complex, 2> decode(const std::vector<bool>& value) const;
};

std::vector<bool> encode_children(Complex b0, Complex b1, std::size_t precision_bits);

std::string bits_to_hex(const std::vector<bool>& bits);
std::vector<bool> hex_to_bits(const std::string& hex, std::size_t width);

/// Address = heap index of the prefix (1 .. 2^n - 1).
ClassicalBitOracle beta_oracle(const StateVector& psi, std::size_t precision_bits);

struct OracleSynthesis {
  StateVector state;
  std::size_t queries = 0;
};

/// Level-by-level preparation driven by oracle queries; 2n queries.
OracleSynthesis oracle_state_synth(std::size_t n, const ClassicalBitOracle& oracle);

/// Runs the query/rotate/unquery loop on `state`. The oracle address is
/// (x << n) | heap(prefix of s); x may be empty. Backward undoes it.
void run_oracle_levels(QuantumState& state, const ClassicalBitOracle& oracle, std::span<const Qubit> x,
                       std::span<const Qubit> s, std::span<const Qubit> value, Direction dir);

}  // namespace qsynth
