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

#include <nlohmann/json.hpp>

#include "qsynth/bit_oracle.hpp"
#include "qsynth/circuit.hpp"
#include "qsynth/resources.hpp"
#include "qsynth/simulate.hpp"
#include "qsynth/state.hpp"

namespace qsynth {

using Json = nlohmann::json;

/// Parse failures throw Error(ParseError) naming the offending field.
Json gate_to_json(const Gate& g);
Gate gate_from_json(const Json& j);

Json circuit_to_json(const CircuitIR& c);
CircuitIR circuit_from_json(const Json& j);

Json state_to_json(const StateVector& s);
StateVector state_from_json(const Json& j);

/// Row-major nested arrays of [re, im].
Json unitary_to_json(const Matrix& u);
Matrix unitary_from_json(const Json& j);

/// {"n": address bits, "precision_bits": b, "entries": {address_hex: value_hex}}.
Json oracle_table_to_json(const ClassicalBitOracle& o);
ClassicalBitOracle oracle_table_from_json(const Json& j);

Json report_to_json(const ResourceReport& r);

/// Builds bindings from a circuit document's optional "oracles" object.
/// Entry types: "unitary" {matrix}, "circuit" {circuit}, "marked" {n, marked},
/// "functional-qram" {unitary}, "classical-qram" {n, table}.
Bindings bindings_from_json(const Json& oracles);

}  // namespace qsynth
