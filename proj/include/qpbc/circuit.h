// Copyright 2026 The qpbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPBC_CIRCUIT_H
#define QPBC_CIRCUIT_H

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpbc/clifford.h"

namespace qpbc {

/// Parameters (z', gamma', epsilon') of a diagonal magic gate U_v.
struct MagicParams {
    uint32_t z = 0;
    uint32_t gamma = 1;
    uint32_t epsilon = 0;

    bool operator==(const MagicParams &other) const noexcept = default;
};

struct UvGate {
    size_t target;
    MagicParams params;

    bool operator==(const UvGate &other) const noexcept = default;
};

struct Measure {
    size_t target;

    bool operator==(const Measure &other) const noexcept = default;
};

using CircuitOp = std::variant<CliffordGate, UvGate, Measure>;

/// A Clifford+U_v circuit with terminal Z-basis measurements.
struct CircuitIR {
    uint32_t p = 3;
    size_t n = 0;
    std::vector<CircuitOp> ops;

    /// Number of U_v gates.
    size_t magic_count() const;
    /// Number of MEASURE operations.
    size_t measure_count() const;

    bool operator==(const CircuitIR &other) const noexcept = default;
};

/// Checks indices, parameter ranges, and that measured qudits are not touched
/// again. Throws IndexError / ShapeError / NotMagic.
void validate_circuit(const CircuitIR &c);

/// Parses the line-oriented text format. Throws ParseError with location.
CircuitIR parse_circuit(std::string_view text);

/// Inverse of parse_circuit.
std::string render_circuit(const CircuitIR &c);

/// Throws NotMagic if gamma' is zero; InvalidModulus for bad p.
void validate_magic_params(uint32_t p, const MagicParams &params);

/// (1, p - 1, 0): the |T_v> used throughout the resource tables.
MagicParams standard_magic_params(uint32_t p);

/// Order of the root of unity in which U_v exponents are written: 9 for p = 3,
/// otherwise p.
uint32_t uv_root_order(uint32_t p);

/// Exponents v_k with U_v |k> = zeta^{v_k} |k>, zeta a primitive root of
/// order uv_root_order(p).
std::vector<uint32_t> uv_exponent_vector(uint32_t p, const MagicParams &params);

}  // namespace qpbc

#endif
