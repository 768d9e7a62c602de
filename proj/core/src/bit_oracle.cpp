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

#include "qsynth/bit_oracle.hpp"

#include <cmath>
#include <cstdio>

#include "qsynth/amplitude_tree.hpp"
#include "qsynth/error.hpp"

namespace qsynth {

std::uint64_t FixedPoint::encode(double v) const {
  const double scale = std::exp2(static_cast<double>(bits)) - 1;
  const double mag = std::min(1.0, std::abs(v));
  const auto m = static_cast<std::uint64_t>(std::llround(mag * scale));
  const bool neg = v < 0 && m != 0;
  return (neg ? std::uint64_t{1} << bits : 0) | m;
}

double FixedPoint::decode(std::uint64_t word) const {
  const double scale = std::exp2(static_cast<double>(bits)) - 1;
  const std::uint64_t m = word & ((std::uint64_t{1} << bits) - 1);
  const double v = static_cast<double>(m) / scale;
  return (word >> bits) & 1U ? -v : v;
}

std::vector<bool> encode_children(Complex b0, Complex b1, std::size_t precision_bits) {
  const FixedPoint fp{precision_bits};
  std::vector<bool> out;
  for (double v : {b0.real(), b0.imag(), b1.real(), b1.imag()}) {
    const std::uint64_t w = fp.encode(v);
    for (std::size_t i = 0; i < fp.width(); ++i) out.push_back((w >> (fp.width() - 1 - i)) & 1U);
  }
  return out;
}

std::vector<bool> ClassicalBitOracle::lookup(std::uint64_t address) const {
  auto it = entries.find(address);
  if (it == entries.end()) return std::vector<bool>(value_width(), false);
  return it->second;
}

std::array<Complex, 2> ClassicalBitOracle::decode(const std::vector<bool>& value) const {
  if (value.size() != value_width()) throw Error(ErrorCode::MalformedOracle, "oracle value has the wrong width");
  const FixedPoint fp{precision_bits};
  std::array<double, 4> v{};
  for (std::size_t f = 0; f < 4; ++f) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < fp.width(); ++i) w = (w << 1) | (value[f * fp.width() + i] ? 1U : 0U);
    v[f] = fp.decode(w);
  }
  return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

std::string bits_to_hex(const std::vector<bool>& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  const std::size_t pad = (4 - bits.size() % 4) % 4;
  unsigned nibble = 0;
  std::size_t filled = pad;
  for (bool b : bits) {
    nibble = (nibble << 1) | (b ? 1U : 0U);
    if (++filled == 4) {
      out.push_back(digits[nibble]);
      nibble = 0;
      filled = 0;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<bool> hex_to_bits(const std::string& hex, std::size_t width) {
  std::vector<bool> all;
  for (char ch : hex) {
    unsigned d = 0;
    if (ch >= '0' && ch <= '9') {
      d = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      d = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      d = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw Error(ErrorCode::MalformedOracle, std::string("bad hex digit '") + ch + "'");
    }
    for (int i = 3; i >= 0; --i) all.push_back((d >> i) & 1U);
  }
  if (all.size() < width) all.insert(all.begin(), width - all.size(), false);
  const std::size_t extra = all.size() - width;
  for (std::size_t i = 0; i < extra; ++i) {
    if (all[i]) throw Error(ErrorCode::MalformedOracle, "hex value wider than the oracle value width");
  }
  return {all.begin() + static_cast<std::ptrdiff_t>(extra), all.end()};
}

ClassicalBitOracle beta_oracle(const StateVector& psi, std::size_t precision_bits) {
  if (precision_bits < 2 || precision_bits > 62) {
    throw Error(ErrorCode::InvalidArgument, "precision bits must be in [2, 62]");
  }
  const AmplitudeTree tree = amplitude_tree(psi);
  ClassicalBitOracle o;
  o.address_bits = tree.n;
  o.precision_bits = precision_bits;
  for (std::size_t h = 1; h < (std::size_t{1} << tree.n); ++h) {
    o.entries[h] = encode_children(tree.beta[2 * h], tree.beta[2 * h + 1], precision_bits);
  }
  return o;
}

void run_oracle_levels(QuantumState& state, const ClassicalBitOracle& oracle, std::span<const Qubit> x,
                       std::span<const Qubit> s, std::span<const Qubit> value, Direction dir) {
  const std::size_t n = s.size();
  if (value.size() != oracle.value_width()) throw Error(ErrorCode::MalformedOracle, "value register width");
  if (oracle.address_bits != x.size() + n) throw Error(ErrorCode::MalformedOracle, "oracle address width");

  auto query = [&](std::size_t level) {
    ++oracle.counter->forward;
    state.apply_permutation([&](BasisKey& k) {
      std::uint64_t prefix = 0;
      for (std::size_t i = 0; i < level; ++i) prefix = (prefix << 1) | (k.get(s[i]) ? 1U : 0U);
      const std::uint64_t heap = (std::uint64_t{1} << level) | prefix;
      const std::uint64_t xv = x.empty() ? 0 : k.read(x);
      const std::vector<bool> v = oracle.lookup((xv << n) | heap);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) k.flip(value[i]);
      }
    });
  };
  // Rotations cached by value register contents.
  std::map<std::vector<bool>, Matrix> cache;
  auto rotate = [&](std::size_t level) {
    state.apply_conditional(std::vector<Qubit>{s[level]}, [&](const BasisKey& k) -> const Matrix* {
      std::vector<bool> bits(value.size());
      for (std::size_t i = 0; i < value.size(); ++i) bits[i] = k.get(value[i]);
      auto it = cache.find(bits);
      if (it == cache.end()) {
        auto [b0, b1] = oracle.decode(bits);
        const double norm = std::sqrt(std::norm(b0) + std::norm(b1));
        Matrix w = Matrix::Identity(2, 2);
        if (norm > 0) w = preparation_gate(b0 / norm, b1 / norm);
        if (dir == Direction::Backward) w.adjointInPlace();
        it = cache.emplace(std::move(bits), std::move(w)).first;
      }
      return &it->second;
    });
  };
  if (dir == Direction::Forward) {
    for (std::size_t level = 0; level < n; ++level) {
      query(level);
      rotate(level);
      query(level);
    }
  } else {
    for (std::size_t level = n; level-- > 0;) {
      query(level);
      rotate(level);
      query(level);
    }
  }
}

OracleSynthesis oracle_state_synth(std::size_t n, const ClassicalBitOracle& oracle) {
  if (oracle.address_bits != n) throw Error(ErrorCode::MalformedOracle, "oracle built for a different n");
  const std::size_t w = oracle.value_width();
  std::vector<Qubit> s(n);
  std::vector<Qubit> value(w);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Qubit>(i);
  for (std::size_t i = 0; i < w; ++i) value[i] = static_cast<Qubit>(n + i);
  SparseState st(n + w);
  st.add(BasisKey(n + w), 1);
  const std::size_t before = oracle.counter->total();
  run_oracle_levels(st, oracle, {}, s, value, Direction::Forward);
  OracleSynthesis out;
  out.queries = oracle.counter->total() - before;
  out.state = st.restrict_to(s);
  return out;
}

}  // namespace qsynth
