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

// Reference implementations used as oracles by the tests. Nothing here
// calls into the library's simulator: operators are built straight from
// basis-index definitions so that disagreements point at the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsynth/circuit.hpp"
#include "qsynth/gate.hpp"
#include "qsynth/linalg.hpp"
#include "qsynth/types.hpp"

namespace qsynth::testing {

inline std::uint64_t bit_of(std::uint64_t index, std::size_t nq, Qubit q) { return (index >> (nq - 1 - q)) & 1U; }

inline std::uint64_t with_bit(std::uint64_t index, std::size_t nq, Qubit q, std::uint64_t v) {
  const std::uint64_t m = std::uint64_t{1} << (nq - 1 - q);
  return v ? (index | m) : (index & ~m);
}

/// Full 2^nq operator of one gate, first target most significant.
inline Matrix reference_matrix(const Gate& g, std::size_t nq) {
  const std::uint64_t dim = std::uint64_t{1} << nq;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const auto& t = g.targets;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const auto c = static_cast<Eigen::Index>(col);
    switch (g.kind) {
      case GateKind::OneQubit:
      case GateKind::TwoQubit: {
        std::uint64_t sub = 0;
        for (Qubit q : t) sub = (sub << 1) | bit_of(col, nq, q);
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << t.size()); ++r) {
          std::uint64_t row = col;
          for (std::size_t i = 0; i < t.size(); ++i) row = with_bit(row, nq, t[i], (r >> (t.size() - 1 - i)) & 1U);
          out(static_cast<Eigen::Index>(row), c) += g.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(sub));
        }
        break;
      }
      case GateKind::Toffoli: {
        bool all = true;
        for (std::size_t i = 1; i < t.size(); ++i) all = all && bit_of(col, nq, t[i]);
        const std::uint64_t row = all ? with_bit(col, nq, t[0], 1 - bit_of(col, nq, t[0])) : col;
        out(static_cast<Eigen::Index>(row), c) = 1;
        break;
      }
      case GateKind::Fanout: {
        std::uint64_t row = col;
        if (bit_of(col, nq, t[0])) {
          for (std::size_t i = 1; i < t.size(); ++i) row = with_bit(row, nq, t[i], 1 - bit_of(col, nq, t[i]));
        }
        out(static_cast<Eigen::Index>(row), c) = 1;
        break;
      }
      case GateKind::BasisReflection: {
        bool match = true;
        for (std::size_t i = 0; i < t.size(); ++i) match = match && (bit_of(col, nq, t[i]) == g.pattern[i]);
        out(c, c) = match ? -1.0 : 1.0;
        break;
      }
      case GateKind::OracleCall:
        throw std::logic_error("reference_matrix: oracle calls have no fixed matrix");
    }
  }
  return out;
}

/// Product of reference matrices over every gate, in layer order.
inline Matrix reference_circuit_matrix(const CircuitIR& c) {
  const std::size_t nq = c.num_qubits();
  Matrix m = Matrix::Identity(Eigen::Index{1} << nq, Eigen::Index{1} << nq);
  for (const auto& layer : c.layers()) {
    for (const Gate& g : layer) m = reference_matrix(g, nq) * m;
  }
  return m;
}

/// Restriction of `full` (over nq qubits) to inputs and outputs whose
/// qubits >= k are zero; the k data qubits are the most significant ones.
inline Matrix zero_ancilla_block(const Matrix& full, std::size_t nq, std::size_t k) {
  const Eigen::Index d = Eigen::Index{1} << k;
  Matrix out(d, d);
  const std::size_t shift = nq - k;
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) out(r, c) = full(r << shift, c << shift);
  }
  return out;
}

inline double op_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

inline GateMatrix random_one_qubit(Rng& rng) {
  const Matrix u = random_unitary(1, rng);
  return GateMatrix(u);
}

inline GateMatrix random_two_qubit(Rng& rng) {
  const Matrix u = random_unitary(2, rng);
  return GateMatrix(u);
}

inline std::vector<Qubit> distinct_qubits(std::size_t nq, std::size_t k, Rng& rng) {
  std::vector<Qubit> all(nq);
  for (std::size_t i = 0; i < nq; ++i) all[i] = static_cast<Qubit>(i);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

/// Random circuit mixing every non-oracle gate kind. With `oracle_id`, some
/// gates become forward or backward oracle calls on `oracle_arity` qubits.
inline CircuitIR random_circuit(std::size_t nq, std::size_t gates, Rng& rng, GateClass cls = GateClass::QACf0,
                                const std::string& oracle_id = "", std::size_t oracle_arity = 0) {
  CircuitIR c(nq, cls);
  std::uniform_int_distribution<int> kind(0, oracle_id.empty() ? 4 : 5);
  for (std::size_t i = 0; i < gates; ++i) {
    const int k = kind(rng);
    const std::size_t max_k = std::min<std::size_t>(nq, 4);
    std::uniform_int_distribution<std::size_t> width(2, max_k);
    if (k == 0 || nq < 2) {
      c.append(Gate::one_qubit(distinct_qubits(nq, 1, rng)[0], random_one_qubit(rng)));
    } else if (k == 1) {
      const auto q = distinct_qubits(nq, 2, rng);
      c.append(Gate::two_qubit(q[0], q[1], random_two_qubit(rng)));
    } else if (k == 2) {
      auto q = distinct_qubits(nq, width(rng), rng);
      const Qubit tgt = q[0];
      c.append(Gate::toffoli(tgt, std::vector<Qubit>(q.begin() + 1, q.end())));
    } else if (k == 3) {
      auto q = distinct_qubits(nq, width(rng), rng);
      c.append(Gate::fanout(q[0], std::vector<Qubit>(q.begin() + 1, q.end())));
    } else if (k == 4) {
      auto q = distinct_qubits(nq, width(rng), rng);
      std::vector<bool> p;
      for (std::size_t j = 0; j < q.size(); ++j) p.push_back(rng() & 1U);
      c.append(Gate::basis_reflection(q, p));
    } else {
      c.append(Gate::oracle_call(oracle_id, distinct_qubits(nq, oracle_arity, rng),
                                 (rng() & 1U) ? Direction::Forward : Direction::Backward));
    }
  }
  return c;
}

/// True when `observed` lies within k standard deviations of `mean`.
inline bool within_sigma(double observed, double mean, double sigma, double k) {
  return std::abs(observed - mean) <= k * sigma;
}

}  // namespace qsynth::testing
