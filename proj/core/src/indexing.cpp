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

#include "qsynth/indexing.hpp"

#include "qsynth/error.hpp"

namespace qsynth {

BitString eval_f(const PrefixAssignment& x, std::size_t n) {
  if (x.size() < (std::size_t{1} << n)) throw Error(ErrorCode::DimensionMismatch, "assignment too short");
  BitString y{0, 0};
  std::size_t h = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const bool b = x[h];
    y = y.append(b);
    h = 2 * h + (b ? 1 : 0);
  }
  return y;
}

BitString Dnf::evaluate(const PrefixAssignment& x) const {
  BitString y{n, 0};
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (const Term& term : outputs[j]) {
      bool all = true;
      for (const Literal& l : term.literals) all = all && (x[l.node] == l.want);
      any = any || all;
    }
    if (any) y.value |= std::uint64_t{1} << (n - 1 - j);
  }
  return y;
}

std::size_t Dnf::num_terms() const {
  std::size_t c = 0;
  for (const auto& o : outputs) c += o.size();
  return c;
}

std::size_t Dnf::num_literals() const {
  std::size_t c = 0;
  for (const auto& o : outputs) {
    for (const Term& t : o) c += t.literals.size();
  }
  return c;
}

std::vector<std::size_t> Dnf::fan_in() const {
  std::vector<std::size_t> c(std::size_t{1} << n, 0);
  for (const auto& o : outputs) {
    for (const Term& t : o) {
      for (const Literal& l : t.literals) ++c[l.node];
    }
  }
  return c;
}

Dnf build_f_dnf(std::size_t n) {
  if (n == 0 || n > 30) throw Error(ErrorCode::InvalidArgument, "dnf needs 1 <= n <= 30");
  Dnf d;
  d.n = n;
  d.outputs.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    // t ranges over strings of length j ending in 1.
    for (std::uint64_t head = 0; head < (std::uint64_t{1} << (j - 1)); ++head) {
      Term term;
      term.t = BitString{j, (head << 1) | 1U};
      for (std::size_t i = 0; i < j; ++i) {
        term.literals.push_back({term.t.prefix(i).heap_index(), term.t.bit(i)});
      }
      d.outputs[j - 1].push_back(std::move(term));
    }
  }
  return d;
}

}  // namespace qsynth
