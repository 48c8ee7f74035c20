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

#ifndef QPBC_CLIFFORD_H
#define QPBC_CLIFFORD_H

#include <algorithm>
#include <string>
#include <vector>

#include "qpbc/pauli.h"

namespace qpbc {

enum class GateKind { F, FINV, S, SINV, SUM, X, Z };

/// A Clifford generator raised to a positive power. For SUM, `target` is the
/// qudit that gets shifted: SUM|c>|t> = |c>|t + c>.
struct CliffordGate {
    GateKind kind;
    size_t target;
    size_t control = 0;
    uint32_t power = 1;

    static CliffordGate f(size_t q, uint32_t power = 1) {
        return {GateKind::F, q, 0, power};
    }
    static CliffordGate finv(size_t q, uint32_t power = 1) {
        return {GateKind::FINV, q, 0, power};
    }
    static CliffordGate s(size_t q, uint32_t power = 1) {
        return {GateKind::S, q, 0, power};
    }
    static CliffordGate sinv(size_t q, uint32_t power = 1) {
        return {GateKind::SINV, q, 0, power};
    }
    static CliffordGate x(size_t q, uint32_t power = 1) {
        return {GateKind::X, q, 0, power};
    }
    static CliffordGate z(size_t q, uint32_t power = 1) {
        return {GateKind::Z, q, 0, power};
    }
    static CliffordGate sum(size_t control, size_t target, uint32_t power = 1) {
        return {GateKind::SUM, target, control, power};
    }

    bool is_two_qudit() const noexcept {
        return kind == GateKind::SUM;
    }
    /// Largest qudit index touched.
    size_t max_qudit() const noexcept {
        return is_two_qudit() ? std::max(target, control) : target;
    }

    bool operator==(const CliffordGate &other) const noexcept = default;
};

const char *gate_mnemonic(GateKind kind);

/// Checks indices against `n` and the power range for modulus p.
void validate_gate(const CliffordGate &g, uint32_t p, size_t n);

/// The gate g^-1 as a single CliffordGate.
CliffordGate inverse_gate(const CliffordGate &g, uint32_t p);

/// g P g^dagger.
PauliObservable conjugate_forward(const CliffordGate &g, const PauliObservable &pauli);

/// g^dagger P g.
PauliObservable conjugate_backward(const CliffordGate &g, const PauliObservable &pauli);

enum class Direction { Forward, Backward };

/// For U = gates[last] ... gates[0]: Forward returns U P U^dagger, Backward
/// returns U^dagger P U.
PauliObservable conjugate_observable(const std::vector<CliffordGate> &gates, const PauliObservable &pauli,
                                     Direction direction);

std::string gate_str(const CliffordGate &g);

}  // namespace qpbc

#endif
