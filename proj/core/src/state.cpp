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

#include "qsynth/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "qsynth/error.hpp"

namespace qsynth {

void QuantumState::apply_toffoli(Qubit target, std::span<const Qubit> controls) {
  apply_permutation([&](BasisKey& key) {
    if (key.all_set(controls)) key.flip(target);
  });
}

void QuantumState::apply_fanout(Qubit control, std::span<const Qubit> targets) {
  apply_permutation([&](BasisKey& key) {
    if (!key.get(control)) return;
    for (Qubit t : targets) key.flip(t);
  });
}

void QuantumState::apply_basis_reflection(std::span<const Qubit> qubits, const std::vector<bool>& pattern) {
  apply_phase([&](const BasisKey& key) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if (key.get(qubits[i]) != pattern[i]) return Complex{1.0, 0.0};
    }
    return Complex{-1.0, 0.0};
  });
}

// ---------------------------------------------------------------------------
// StateVector

namespace {

// Loads a dense index into a one-word key without reallocating.
void load_key(BasisKey& key, std::uint64_t index, std::size_t n) {
  std::uint64_t w = 0;
  for (std::size_t q = 0; q < n; ++q) w |= ((index >> (n - 1 - q)) & 1U) << q;
  key.words()[0] = w;
}

std::uint64_t key_index(const BasisKey& key, std::size_t n) {
  const std::uint64_t w = key.words()[0];
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < n; ++q) index |= ((w >> q) & 1U) << (n - 1 - q);
  return index;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::uint64_t basis_index) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || num_qubits > 30) {
    throw Error(ErrorCode::TooManyQubits, "dense state needs 1..30 qubits, got " + std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  if (basis_index >= amps_.size()) throw Error(ErrorCode::TargetOutOfRange, "basis index out of range");
  amps_[basis_index] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
  if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
    throw Error(ErrorCode::DimensionMismatch, "amplitude count must be a power of two >= 2");
  }
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorCode::InvalidArgument, "non-finite amplitude");
    }
  }
  StateVector s;
  s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps.size()));
  s.amps_ = std::move(amps);
  return s;
}

void StateVector::apply_matrix(std::span<const Qubit> targets, const Matrix& op) {
  const std::size_t k = targets.size();
  const std::size_t dim = std::size_t{1} << k;
  if (static_cast<std::size_t>(op.rows()) != dim || static_cast<std::size_t>(op.cols()) != dim) {
    throw Error(ErrorCode::DimensionMismatch, "operator does not match target count");
  }
  std::vector<std::uint64_t> offsets(dim, 0);
  std::uint64_t all = 0;
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((l >> (k - 1 - i)) & 1U) offsets[l] |= mask(targets[i]);
    }
  }
  for (Qubit t : targets) all |= mask(t);
  std::vector<Complex> in(dim);
  for (std::uint64_t base = 0; base < amps_.size(); ++base) {
    if (base & all) continue;
    for (std::size_t l = 0; l < dim; ++l) in[l] = amps_[base | offsets[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      Complex acc{};
      for (std::size_t l = 0; l < dim; ++l) acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l)) * in[l];
      amps_[base | offsets[r]] = acc;
    }
  }
}

void StateVector::apply_conditional(std::span<const Qubit> targets, const ConditionalSelect& select) {
  const std::size_t k = targets.size();
  const std::size_t dim = std::size_t{1} << k;
  std::vector<std::uint64_t> offsets(dim, 0);
  std::uint64_t all = 0;
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((l >> (k - 1 - i)) & 1U) offsets[l] |= mask(targets[i]);
    }
  }
  for (Qubit t : targets) all |= mask(t);
  BasisKey key(num_qubits_);
  std::vector<Complex> in(dim);
  for (std::uint64_t base = 0; base < amps_.size(); ++base) {
    if (base & all) continue;
    load_key(key, base, num_qubits_);
    const Matrix* op = select(key);
    if (op == nullptr) continue;
    for (std::size_t l = 0; l < dim; ++l) in[l] = amps_[base | offsets[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      Complex acc{};
      for (std::size_t l = 0; l < dim; ++l) acc += (*op)(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l)) * in[l];
      amps_[base | offsets[r]] = acc;
    }
  }
}

void StateVector::apply_permutation(const std::function<void(BasisKey&)>& map) {
  std::vector<Complex> out(amps_.size(), Complex{});
  BasisKey key(num_qubits_);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i] == Complex{}) continue;
    load_key(key, i, num_qubits_);
    map(key);
    out[key_index(key, num_qubits_)] += amps_[i];
  }
  amps_ = std::move(out);
}

void StateVector::apply_phase(const std::function<Complex(const BasisKey&)>& phase) {
  BasisKey key(num_qubits_);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i] == Complex{}) continue;
    load_key(key, i, num_qubits_);
    amps_[i] *= phase(key);
  }
}

void StateVector::apply_toffoli(Qubit target, std::span<const Qubit> controls) {
  std::uint64_t cmask = 0;
  for (Qubit c : controls) cmask |= mask(c);
  const std::uint64_t tmask = mask(target);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & cmask) == cmask && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
  }
}

void StateVector::apply_fanout(Qubit control, std::span<const Qubit> targets) {
  const std::uint64_t cmask = mask(control);
  std::uint64_t tmask = 0;
  for (Qubit t : targets) tmask |= mask(t);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const std::uint64_t j = i ^ tmask;
    if ((i & cmask) && i < j) std::swap(amps_[i], amps_[j]);
  }
}

void StateVector::apply_basis_reflection(std::span<const Qubit> qubits, const std::vector<bool>& pattern) {
  std::uint64_t pmask = 0;
  std::uint64_t pval = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    pmask |= mask(qubits[i]);
    if (pattern[i]) pval |= mask(qubits[i]);
  }
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & pmask) == pval) amps_[i] = -amps_[i];
  }
}

double StateVector::norm_squared() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::zero_probability(std::span<const Qubit> qubits) const {
  std::uint64_t m = 0;
  for (Qubit q : qubits) m |= mask(q);
  double s = 0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (!(i & m)) s += std::norm(amps_[i]);
  }
  return s;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "fidelity of states with different widths");
  Complex ip{};
  for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
  return std::norm(ip);
}

double trace_distance(const StateVector& a, const StateVector& b) {
  return std::sqrt(std::max(0.0, 1.0 - fidelity(a, b)));
}

double l2_distance(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "distance of states with different widths");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// SparseState

SparseState::SparseState(std::size_t num_qubits, const BasisKey& basis) : num_qubits_(num_qubits) {
  amps_.emplace(basis, Complex{1.0, 0.0});
}

SparseState::SparseState(std::size_t num_qubits) : num_qubits_(num_qubits) {}

Complex SparseState::amplitude(const BasisKey& key) const {
  auto it = amps_.find(key);
  return it == amps_.end() ? Complex{} : it->second;
}

void SparseState::add(const BasisKey& key, Complex amp) { amps_[key] += amp; }

void SparseState::prune() {
  std::erase_if(amps_, [](const auto& kv) { return std::abs(kv.second) < kPruneTol; });
}

void SparseState::apply_matrix(std::span<const Qubit> targets, const Matrix& op) {
  const std::size_t dim = std::size_t{1} << targets.size();
  if (static_cast<std::size_t>(op.rows()) != dim || static_cast<std::size_t>(op.cols()) != dim) {
    throw Error(ErrorCode::DimensionMismatch, "operator does not match target count");
  }
  apply_conditional(targets, [&op](const BasisKey&) { return &op; });
}

void SparseState::apply_conditional(std::span<const Qubit> targets, const ConditionalSelect& select) {
  const std::size_t dim = std::size_t{1} << targets.size();
  Map out;
  out.reserve(amps_.size() * 2);
  for (const auto& [key, amp] : amps_) {
    BasisKey rest = key;
    const std::uint64_t local = key.read(targets);
    rest.write(targets, 0);
    const Matrix* op = select(rest);
    if (op == nullptr) {
      out[key] += amp;
      continue;
    }
    for (std::size_t r = 0; r < dim; ++r) {
      const Complex c = (*op)(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(local));
      if (c == Complex{}) continue;
      BasisKey next = rest;
      next.write(targets, r);
      out[next] += c * amp;
    }
  }
  amps_ = std::move(out);
  prune();
}

void SparseState::apply_permutation(const std::function<void(BasisKey&)>& map) {
  Map out;
  out.reserve(amps_.size());
  for (auto& [key, amp] : amps_) {
    BasisKey next = key;
    map(next);
    out[std::move(next)] += amp;
  }
  amps_ = std::move(out);
}

void SparseState::apply_phase(const std::function<Complex(const BasisKey&)>& phase) {
  for (auto& [key, amp] : amps_) amp *= phase(key);
}

void SparseState::apply_toffoli(Qubit target, std::span<const Qubit> controls) {
  QuantumState::apply_toffoli(target, controls);
}

void SparseState::apply_fanout(Qubit control, std::span<const Qubit> targets) {
  QuantumState::apply_fanout(control, targets);
}

void SparseState::apply_basis_reflection(std::span<const Qubit> qubits, const std::vector<bool>& pattern) {
  QuantumState::apply_basis_reflection(qubits, pattern);
}

double SparseState::norm_squared() const {
  double s = 0;
  for (const auto& [key, amp] : amps_) s += std::norm(amp);
  return s;
}

double SparseState::zero_probability(std::span<const Qubit> qubits) const {
  double s = 0;
  for (const auto& [key, amp] : amps_) {
    bool zero = true;
    for (Qubit q : qubits) zero = zero && !key.get(q);
    if (zero) s += std::norm(amp);
  }
  return s;
}

StateVector SparseState::restrict_to(std::span<const Qubit> qubits) const {
  std::vector<Complex> amps(std::size_t{1} << qubits.size(), Complex{});
  for (const auto& [key, amp] : amps_) {
    BasisKey rest = key;
    for (Qubit q : qubits) rest.set(q, false);
    if (!rest.is_zero()) continue;
    amps[key.read(qubits)] += amp;
  }
  return StateVector::from_amplitudes(std::move(amps));
}

Complex inner_product(const SparseState& a, const SparseState& b) {
  Complex ip{};
  for (const auto& [key, amp] : a.amplitudes()) ip += std::conj(amp) * b.amplitude(key);
  return ip;
}

}  // namespace qsynth
