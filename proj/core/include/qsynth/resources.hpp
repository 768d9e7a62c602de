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
#include <map>
#include <string>
#include <vector>

#include "qsynth/circuit.hpp"
#include "qsynth/lowering.hpp"

namespace qsynth {

struct ResourceReport {
  std::size_t depth = 0;
  std::size_t size = 0;
  std::size_t ancillae = 0;
  std::size_t forward_queries = 0;
  std::size_t backward_queries = 0;
  std::size_t num_qubits = 0;

  std::size_t queries() const { return forward_queries + backward_queries; }
  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

/// Per-oracle cost used when an oracle call stands for a known circuit.
/// The call then contributes that circuit's depth and size, plus one query.
using OracleCosts = std::map<std::string, ResourceReport>;

/// Accumulates resources of a gate stream without storing gates. Uses the
/// same as-soon-as-possible layering as CircuitIR::append, so streaming a
/// builder into a tally yields the report of the circuit it would build.
class ResourceTally final : public CircuitSink {
 public:
  explicit ResourceTally(OracleCosts costs = {}) : costs_(std::move(costs)) {}

  void append(Gate gate) override;
  void barrier() override { floor_ = layers_.size(); }

  /// Records a gate at an explicit layer index.
  void record(std::size_t layer, const Gate& gate);
  void set_num_qubits(std::size_t n) { num_qubits_ = std::max(num_qubits_, n); }
  void set_io_width(std::size_t n) { io_width_ = n; }

  std::size_t depth() const { return layers_.size(); }
  /// The circuit as emitted; costed oracle calls expand to their circuits.
  ResourceReport native() const;
  /// The circuit after lower_to_qnc.
  ResourceReport lowered() const;

 private:
  struct LayerAcc {
    std::size_t native_depth = 0;
    std::size_t lowered_depth = 0;
    std::size_t lowering_ancillae = 0;
  };

  OracleCosts costs_;
  std::vector<std::size_t> frontier_;
  std::vector<LayerAcc> layers_;
  std::size_t floor_ = 0;
  std::size_t num_qubits_ = 0;
  std::size_t io_width_ = 0;
  std::size_t native_size_ = 0;
  std::size_t lowered_size_ = 0;
  std::size_t forward_ = 0;
  std::size_t backward_ = 0;
};

/// Width of the circuit's I/O register ("input", else "output", else 0).
std::size_t io_width(const CircuitIR& circuit);

ResourceReport report(const CircuitIR& circuit, const OracleCosts& costs = {});
ResourceReport lowered_report(const CircuitIR& circuit, const OracleCosts& costs = {});

}  // namespace qsynth
