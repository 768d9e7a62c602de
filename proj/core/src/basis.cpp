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

#include "qsynth/basis.hpp"

#include <bit>

#include "qsynth/error.hpp"
#include "qsynth/types.hpp"

namespace qsynth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnboundOracle: return "UnboundOracle";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::NonUnitaryGate: return "NonUnitaryGate";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::NonUnitaryInput: return "NonUnitaryInput";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::QramPropertyViolated: return "QramPropertyViolated";
    case ErrorCode::UnnormalizedState: return "UnnormalizedState";
    case ErrorCode::MalformedOracle: return "MalformedOracle";
    case ErrorCode::RoundCapExceeded: return "RoundCapExceeded";
    case ErrorCode::OverlappingLayer: return "OverlappingLayer";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

BitString BitString::from_heap_index(std::size_t h) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "heap index 0");
  const std::size_t len = std::bit_width(h) - 1;
  return {len, h - (std::size_t{1} << len)};
}

BitString BitString::parse(const std::string& text) {
  if (text.size() > 63) throw Error(ErrorCode::InvalidArgument, "bit string longer than 63 bits");
  BitString s;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorCode::InvalidArgument, "bit string has non-binary character");
    s = s.append(c == '1');
  }
  return s;
}

std::string BitString::str() const {
  std::string out(length, '0');
  for (std::size_t i = 0; i < length; ++i) out[i] = bit(i) ? '1' : '0';
  return out;
}

std::uint64_t BasisKey::read(std::span<const Qubit> qubits) const {
  std::uint64_t v = 0;
  for (Qubit q : qubits) v = (v << 1) | (get(q) ? 1U : 0U);
  return v;
}

void BasisKey::write(std::span<const Qubit> qubits, std::uint64_t value) {
  const std::size_t k = qubits.size();
  for (std::size_t i = 0; i < k; ++i) set(qubits[i], (value >> (k - 1 - i)) & 1U);
}

bool BasisKey::all_set(std::span<const Qubit> qubits) const {
  for (Qubit q : qubits) {
    if (!get(q)) return false;
  }
  return true;
}

bool BasisKey::is_zero() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

BasisKey BasisKey::from_index(std::uint64_t index, std::size_t num_qubits) {
  BasisKey key(num_qubits);
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((index >> (num_qubits - 1 - q)) & 1U) key.set(static_cast<Qubit>(q), true);
  }
  return key;
}

std::uint64_t BasisKey::to_index(std::size_t num_qubits) const {
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < num_qubits; ++q) index = (index << 1) | (get(static_cast<Qubit>(q)) ? 1U : 0U);
  return index;
}

std::size_t BasisKeyHash::operator()(const BasisKey& key) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : key.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

}  // namespace qsynth
