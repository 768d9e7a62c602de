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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

namespace qsynth {

using Complex = std::complex<double>;
using Qubit = std::uint32_t;

/// Dense operator. Row/column index bit (k-1-i) belongs to the i-th target,
/// i.e. the first target is the most significant bit.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Gate payloads never exceed two qubits, so they live inline.
using GateMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-10;

/// A classical bit string; bit 0 is the leftmost character and the most
/// significant bit of `value`. Limited to 63 bits.
struct BitString {
  std::size_t length = 0;
  std::uint64_t value = 0;

  bool bit(std::size_t i) const { return (value >> (length - 1 - i)) & 1U; }
  BitString append(bool b) const { return {length + 1, (value << 1) | (b ? 1U : 0U)}; }
  BitString prefix(std::size_t len) const { return {len, len == 0 ? 0 : value >> (length - len)}; }
  /// Position in a binary heap: 1 for the empty string, 2^len + value otherwise.
  std::size_t heap_index() const { return (std::size_t{1} << length) + value; }
  static BitString from_heap_index(std::size_t h);
  static BitString parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
};

}  // namespace qsynth
