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

#ifndef QPBC_TABLEAU_H
#define QPBC_TABLEAU_H

#include <optional>
#include <vector>

#include "qpbc/clifford.h"
#include "qpbc/pauli.h"
#include "qpbc/rng.h"

namespace qpbc {

/// A stabilizer state given by n independent, pairwise commuting generators.
/// The state is the joint +1 eigenvector of every generator (phases included).
class StabilizerTableau {
   public:
    /// Validates commutation and independence; throws NotAStabilizerGroup.
    StabilizerTableau(uint32_t p, std::vector<PauliObservable> generators);

    /// |0...0>, generated by Z_0, ..., Z_{n-1}.
    static StabilizerTableau zero_state(uint32_t p, size_t n);

    uint32_t p() const noexcept {
        return p_;
    }
    size_t n() const noexcept {
        return generators_.size();
    }
    const std::vector<PauliObservable> &generators() const noexcept {
        return generators_;
    }

    /// If M is in the group generated by the stabilizers up to a phase, returns
    /// the delta with M |psi> = omega^delta |psi>; otherwise nullopt.
    std::optional<uint32_t> eigenvalue_exponent(const PauliObservable &m) const;

    /// True when both tableaux generate the same group with the same phases.
    bool same_state(const StabilizerTableau &other) const;

   private:
    uint32_t p_;
    std::vector<PauliObservable> generators_;
};

/// Conjugates every generator by g.
StabilizerTableau apply_gate(const StabilizerTableau &t, const CliffordGate &g);

struct TableauMeasurement {
    uint32_t sigma;
    StabilizerTableau tableau;
    bool deterministic;
};

/// Measures M (outcome sigma means eigenvalue omega^sigma). Random outcomes are
/// uniform; the lowest-index non-commuting generator is the pivot.
TableauMeasurement measure_pauli(const StabilizerTableau &t, const PauliObservable &m, Rng &rng);

/// Gates C with C |0...0> equal to the tableau's state (as a stabilizer group
/// with phases). Uses gates from {F, FINV, S, SINV, SUM, X, Z}.
std::vector<CliffordGate> synthesize_preparation_circuit(const StabilizerTableau &t);

}  // namespace qpbc

#endif
