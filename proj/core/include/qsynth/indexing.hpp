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
#include <vector>

#include "qsynth/types.hpp"

namespace qsynth {

/// One bit per string of length < n, indexed by heap index (1 .. 2^n - 1);
/// element 0 is unused.
using PrefixAssignment = std::vector<bool>;

/// f(x)_i = x_{f(x)_{<i}}.
BitString eval_f(const PrefixAssignment& x, std::size_t n);

struct Literal {
  std::size_t node = 1;  // heap index of the prefix read
  bool want = true;
};

struct Term {
  BitString t;
  std::vector<Literal> literals;
};

/// Output bit j is the OR over t in {0,1}^j with t_j = 1 of the AND of
/// (x_{t<i} = t_i), i = 1..j.
struct Dnf {
  std::size_t n = 0;
  std::vector<std::vector<Term>> outputs;

  BitString evaluate(const PrefixAssignment& x) const;
  std::size_t num_terms() const;
  std::size_t num_literals() const;
  /// Literal occurrences per heap node.
  std::vector<std::size_t> fan_in() const;
};

Dnf build_f_dnf(std::size_t n);

}  // namespace qsynth
