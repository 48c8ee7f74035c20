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

#ifndef QPBC_GADGET_H
#define QPBC_GADGET_H

#include <variant>
#include <vector>

#include "qpbc/circuit.h"

namespace qpbc {

/// Z-basis measurement of a gadget wire; its outcome is named by `id`.
struct MidMeasure {
    size_t wire;
    size_t id;

    bool operator==(const MidMeasure &other) const noexcept = default;
};

/// C_sigma = U_v X^{-sigma} U_v^dagger on `wire`, with sigma the outcome of
/// MidMeasure `id`.
struct Correction {
    size_t wire;
    size_t id;
    MagicParams params;

    bool operator==(const Correction &other) const noexcept = default;
};

/// Terminal Z-basis measurement of a logical qudit.
struct FinalMeasure {
    size_t wire;
    size_t logical;

    bool operator==(const FinalMeasure &other) const noexcept = default;
};

using GadgetElement = std::variant<CliffordGate, MidMeasure, Correction, FinalMeasure>;

/// Adaptive Clifford circuit on n data wires plus one magic wire per U_v gate.
/// Wire n + i starts in |T_v> with parameters magic[i]; data wires start in |0>.
struct GadgetizedCircuit {
    uint32_t p = 3;
    size_t n = 0;
    std::vector<MagicParams> magic;
    std::vector<GadgetElement> elements;
    /// Logical-to-physical wire map: the initial map followed by one snapshot
    /// after each gadget.
    std::vector<std::vector<size_t>> wire_map_history;

    size_t wires() const {
        return n + magic.size();
    }
    size_t t() const {
        return magic.size();
    }
    size_t final_measure_count() const;

    bool operator==(const GadgetizedCircuit &other) const noexcept = default;
};

GadgetizedCircuit gadgetize(const CircuitIR &c);

}  // namespace qpbc

#endif
