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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsynth/types.hpp"

namespace qsynth {

/// Computational basis state over an arbitrary number of qubits. Qubit q is
/// stored at bit q of the word array; the dense index convention (qubit 0 is
/// the most significant bit) is applied only when converting to an index.
class BasisKey {
 public:
  BasisKey() = default;
  explicit BasisKey(std::size_t num_qubits) : words_((num_qubits + 63) / 64, 0) {}

  bool get(Qubit q) const { return (words_[q >> 6] >> (q & 63)) & 1U; }
  void set(Qubit q, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (q & 63);
    if (v) {
      words_[q >> 6] |= m;
    } else {
      words_[q >> 6] &= ~m;
    }
  }
  void flip(Qubit q) { words_[q >> 6] ^= std::uint64_t{1} << (q & 63); }

  /// Reads the listed qubits as an integer, first qubit most significant.
  std::uint64_t read(std::span<const Qubit> qubits) const;
  void write(std::span<const Qubit> qubits, std::uint64_t value);

  bool all_set(std::span<const Qubit> qubits) const;
  bool is_zero() const;

  static BasisKey from_index(std::uint64_t index, std::size_t num_qubits);
  std::uint64_t to_index(std::size_t num_qubits) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const BasisKey&, const BasisKey&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct BasisKeyHash {
  std::size_t operator()(const BasisKey& key) const noexcept;
};

}  // namespace qsynth
