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
#include <unordered_map>
#include <vector>

#include "qsynth/basis.hpp"
#include "qsynth/types.hpp"

namespace qsynth {

/// Chooses the operator applied to the targets given the basis state of the
/// remaining qubits (target bits read as zero). nullptr leaves the block alone.
using ConditionalSelect = std::function<const Matrix*(const BasisKey&)>;

/// Simulation substrate. Gates, oracles and procedures are all expressed
/// through these primitives so that they run unchanged on either backend.
class QuantumState {
 public:
  virtual ~QuantumState() = default;

  virtual std::size_t num_qubits() const = 0;

  virtual void apply_matrix(std::span<const Qubit> targets, const Matrix& op) = 0;
  virtual void apply_conditional(std::span<const Qubit> targets, const ConditionalSelect& select) = 0;
  /// `map` must be a bijection on basis states.
  virtual void apply_permutation(const std::function<void(BasisKey&)>& map) = 0;
  virtual void apply_phase(const std::function<Complex(const BasisKey&)>& phase) = 0;

  /// Flips `target` iff every control is 1.
  virtual void apply_toffoli(Qubit target, std::span<const Qubit> controls);
  /// XORs `control` onto every target.
  virtual void apply_fanout(Qubit control, std::span<const Qubit> targets);
  /// Negates the amplitude of basis states whose `qubits` equal `pattern`.
  virtual void apply_basis_reflection(std::span<const Qubit> qubits, const std::vector<bool>& pattern);

  virtual double norm_squared() const = 0;
  /// Probability that every listed qubit reads 0.
  virtual double zero_probability(std::span<const Qubit> qubits) const = 0;
};

/// Dense 2^m amplitude vector. Qubit 0 is the most significant bit of the
/// basis-state index.
class StateVector final : public QuantumState {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t num_qubits, std::uint64_t basis_index = 0);
  /// Takes ownership of `amps`; the length must be a power of two >= 2.
  static StateVector from_amplitudes(std::vector<Complex> amps);

  std::size_t num_qubits() const override { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  void apply_matrix(std::span<const Qubit> targets, const Matrix& op) override;
  void apply_conditional(std::span<const Qubit> targets, const ConditionalSelect& select) override;
  void apply_permutation(const std::function<void(BasisKey&)>& map) override;
  void apply_phase(const std::function<Complex(const BasisKey&)>& phase) override;
  void apply_toffoli(Qubit target, std::span<const Qubit> controls) override;
  void apply_fanout(Qubit control, std::span<const Qubit> targets) override;
  void apply_basis_reflection(std::span<const Qubit> qubits, const std::vector<bool>& pattern) override;

  double norm_squared() const override;
  double zero_probability(std::span<const Qubit> qubits) const override;

  bool is_normalized(double tol = kNormTol) const;
  std::uint64_t mask(Qubit q) const { return std::uint64_t{1} << (num_qubits_ - 1 - q); }

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// |<a|b>|^2 for equal-width states.
double fidelity(const StateVector& a, const StateVector& b);
/// Trace distance between the pure states a and b.
double trace_distance(const StateVector& a, const StateVector& b);
/// Euclidean distance between amplitude vectors.
double l2_distance(const StateVector& a, const StateVector& b);

/// Hash-map state over an arbitrary qubit count holding only nonzero
/// amplitudes. Used when circuits carry far more ancillae than a dense
/// vector could address but the reachable support stays small.
class SparseState final : public QuantumState {
 public:
  using Map = std::unordered_map<BasisKey, Complex, BasisKeyHash>;

  SparseState(std::size_t num_qubits, const BasisKey& basis);
  explicit SparseState(std::size_t num_qubits);

  std::size_t num_qubits() const override { return num_qubits_; }
  std::size_t support_size() const { return amps_.size(); }
  const Map& amplitudes() const { return amps_; }
  Complex amplitude(const BasisKey& key) const;
  void add(const BasisKey& key, Complex amp);

  void apply_matrix(std::span<const Qubit> targets, const Matrix& op) override;
  void apply_conditional(std::span<const Qubit> targets, const ConditionalSelect& select) override;
  void apply_permutation(const std::function<void(BasisKey&)>& map) override;
  void apply_phase(const std::function<Complex(const BasisKey&)>& phase) override;
  void apply_toffoli(Qubit target, std::span<const Qubit> controls) override;
  void apply_fanout(Qubit control, std::span<const Qubit> targets) override;
  void apply_basis_reflection(std::span<const Qubit> qubits, const std::vector<bool>& pattern) override;

  double norm_squared() const override;
  double zero_probability(std::span<const Qubit> qubits) const override;

  /// Projects onto the given qubits, requiring every other qubit to be |0>.
  /// Returns the (unnormalized) dense restriction.
  StateVector restrict_to(std::span<const Qubit> qubits) const;

  /// Amplitudes below this magnitude are dropped after each operation.
  static constexpr double kPruneTol = 1e-14;

 private:
  void prune();

  std::size_t num_qubits_;
  Map amps_;
};

/// Inner product <a|b>.
Complex inner_product(const SparseState& a, const SparseState& b);

}  // namespace qsynth
