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

#ifndef QPBC_EMITTER_H
#define QPBC_EMITTER_H

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qpbc/circuit.h"
#include "qpbc/clifford.h"
#include "qpbc/pauli.h"

namespace qpbc {

/// constant + sum_i coef_i * m[id_i] over F_p, where m[id] are recorded
/// measurement outcomes.
struct LinearRule {
    uint32_t constant = 0;
    std::vector<std::pair<size_t, uint32_t>> terms;  // (measurement id, coefficient)

    uint32_t evaluate(const std::vector<uint32_t> &m, uint32_t p) const;
    bool operator==(const LinearRule &other) const noexcept = default;
};

/// Z-basis measurement; the outcome is stored as m[id].
struct AncillaMeasure {
    size_t wire;
    size_t id;

    bool operator==(const AncillaMeasure &other) const noexcept = default;
};

/// Returns `wire` to |0>.
struct AncillaReset {
    size_t wire;

    bool operator==(const AncillaReset &other) const noexcept = default;
};

/// X^{rule(m)} on `wire`.
struct ConditionalX {
    size_t wire;
    LinearRule power;

    bool operator==(const ConditionalX &other) const noexcept = default;
};

/// Sets classical output `output` to rule(m).
struct ClassicalCombine {
    size_t output;
    LinearRule rule;

    bool operator==(const ClassicalCombine &other) const noexcept = default;
};

using AdaptiveElement = std::variant<CliffordGate, AncillaMeasure, AncillaReset, ConditionalX, ClassicalCombine>;

/// How one program observable was realized.
struct ObservableMeta {
    PauliObservable observable;  // as requested
    PauliObservable emitted;     // as measured by the hardware block (k-scaled)
    uint32_t k = 1;
    size_t output = 0;  // classical output holding sigma
};

/// Executable adaptive circuit. Wires [0, comp_wires) are computational;
/// [comp_wires, comp_wires + anc_wires) are ancillas. All wires start in |0>
/// unless `inputs` assigns a magic state to a computational wire.
struct AdaptiveCircuit {
    uint32_t p = 3;
    size_t comp_wires = 0;
    size_t anc_wires = 0;
    std::vector<std::optional<MagicParams>> inputs;
    std::vector<AdaptiveElement> elements;
    std::vector<ObservableMeta> meta;
    size_t measurement_count = 0;
    size_t output_count = 0;

    size_t wires() const {
        return comp_wires + anc_wires;
    }
};

struct GateStats {
    size_t sum_count = 0;
    size_t depth = 0;

    bool operator==(const GateStats &other) const noexcept = default;
};

struct EmitOptions {
    bool optimize_k = false;
};

/// Single shared ancilla; one measurement block per observable.
AdaptiveCircuit emit_method1(const std::vector<PauliObservable> &program, const EmitOptions &options = {});

/// One GHZ ancilla per computational wire; SUM layers run in parallel.
AdaptiveCircuit emit_method2(const std::vector<PauliObservable> &program, const EmitOptions &options = {});

/// Constant-depth |GHZ_t> preparation on t ancilla wires using mid-circuit
/// measurement, feed-forward X corrections, and reset. Throws ShapeError for
/// t < 2.
AdaptiveCircuit ghz_prep_circuit(size_t t, uint32_t p);

struct KScaling {
    uint32_t k;
    PauliObservable scaled;  // omega^{k lambda} X(kx) Z(kz)
    /// sigma = inverse_k * sigma' + offset, where sigma' is the eigenvalue
    /// exponent of `scaled`.
    uint32_t inverse_k;
    uint32_t offset;

    uint32_t reinterpret(uint32_t sigma_prime, uint32_t p) const;
};

/// SUM count of the block measuring M: sum_j (x_j + z_j [x_j = 0]).
size_t sum_cost(const PauliObservable &m);

/// Chooses k minimizing sum_cost(M^k) (ties to the smallest k). Throws
/// NoOpObservable for observables with x = z = 0.
KScaling optimize_k(const PauliObservable &m);

GateStats stats(const AdaptiveCircuit &c);

/// Text form: the circuit grammar extended with MEASURE_ANC, RESET, CX,
/// CCOMBINE and INPUT lines.
std::string render_adaptive(const AdaptiveCircuit &c);

}  // namespace qpbc

#endif
