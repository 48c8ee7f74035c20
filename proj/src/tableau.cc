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

#include "qpbc/tableau.h"

#include <algorithm>

#include "qpbc/errors.h"
#include "qpbc/fp_linalg.h"

namespace qpbc {

StabilizerTableau::StabilizerTableau(uint32_t p, std::vector<PauliObservable> generators)
    : p_(PrimeField(p).p()), generators_(std::move(generators)) {
    const size_t n = generators_.size();
    FpMatrix rows;
    for (const auto &g : generators_) {
        if (g.p() != p_ || g.n() != n) {
            throw NotAStabilizerGroup("expected " + std::to_string(n) + " generators on " + std::to_string(n) +
                                      " qudits, got width " + std::to_string(g.n()));
        }
        rows.push_back(g.symplectic());
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!commutes(generators_[i], generators_[j])) {
                throw NotAStabilizerGroup("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                          " do not commute");
            }
        }
    }
    if (fp_rank(PrimeField(p_), rows) != n) {
        throw NotAStabilizerGroup("generators are not independent");
    }
}

StabilizerTableau StabilizerTableau::zero_state(uint32_t p, size_t n) {
    std::vector<PauliObservable> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back(PauliObservable::z_on(p, n, q));
    }
    return StabilizerTableau(p, std::move(gens));
}

std::optional<uint32_t> StabilizerTableau::eigenvalue_exponent(const PauliObservable &m) const {
    if (m.p() != p_ || m.n() != n()) {
        throw ShapeError("observable does not match tableau shape");
    }
    FpMatrix rows;
    for (const auto &g : generators_) {
        rows.push_back(g.symplectic());
    }
    auto coeffs = fp_solve_combination(PrimeField(p_), rows, m.symplectic());
    if (!coeffs) {
        return std::nullopt;
    }
    PauliObservable product = PauliObservable::identity(p_, n());
    for (size_t i = 0; i < n(); i++) {
        if ((*coeffs)[i]) {
            product = pauli_mul(product, pauli_pow(generators_[i], (*coeffs)[i]));
        }
    }
    return PrimeField(p_).sub(m.lambda(), product.lambda());
}

bool StabilizerTableau::same_state(const StabilizerTableau &other) const {
    if (other.p_ != p_ || other.n() != n()) {
        return false;
    }
    for (const auto &g : other.generators_) {
        auto e = eigenvalue_exponent(g);
        if (!e || *e != 0) {
            return false;
        }
    }
    return true;
}

StabilizerTableau apply_gate(const StabilizerTableau &t, const CliffordGate &g) {
    validate_gate(g, t.p(), t.n());
    std::vector<PauliObservable> gens;
    gens.reserve(t.n());
    for (const auto &gen : t.generators()) {
        gens.push_back(conjugate_forward(g, gen));
    }
    return StabilizerTableau(t.p(), std::move(gens));
}

TableauMeasurement measure_pauli(const StabilizerTableau &t, const PauliObservable &m, Rng &rng) {
    if (m.p() != t.p() || m.n() != t.n()) {
        throw ShapeError("observable does not match tableau shape");
    }
    PrimeField f(t.p());
    const auto &gens = t.generators();
    std::optional<size_t> pivot;
    std::vector<uint32_t> phases(gens.size());
    for (size_t i = 0; i < gens.size(); i++) {
        phases[i] = commutation_phase(m, gens[i]);
        if (phases[i] && !pivot) {
            pivot = i;
        }
    }
    if (!pivot) {
        auto delta = t.eigenvalue_exponent(m);
        if (!delta) {
            throw InternalInvariantViolation("commuting observable outside a maximal stabilizer group");
        }
        return {*delta, t, true};
    }
    const size_t r = *pivot;
    const uint32_t sigma = uniform_below(rng, t.p());
    std::vector<PauliObservable> next = gens;
    const uint32_t inv_r = f.inv(phases[r]);
    for (size_t i = 0; i < next.size(); i++) {
        if (i == r || phases[i] == 0) {
            continue;
        }
        uint32_t c = f.neg(f.mul(phases[i], inv_r));
        next[i] = pauli_mul(next[i], pauli_pow(gens[r], c));
    }
    PauliObservable measured = m;
    measured.set_lambda(static_cast<int64_t>(m.lambda()) - sigma);
    next[r] = measured;
    return {sigma, StabilizerTableau(t.p(), std::move(next)), false};
}

std::vector<CliffordGate> synthesize_preparation_circuit(const StabilizerTableau &t) {
    const uint32_t p = t.p();
    const size_t n = t.n();
    PrimeField f(p);
    std::vector<PauliObservable> rows = t.generators();
    std::vector<CliffordGate> reduce;  // U with U|psi> = |0...0>

    auto apply = [&](const CliffordGate &g) {
        for (auto &r : rows) {
            r = conjugate_forward(g, r);
        }
        reduce.push_back(g);
    };

    for (size_t j = 0; j < n; j++) {
        size_t pick = j;
        while (pick < n && rows[pick].x(j) == 0 && rows[pick].z(j) == 0) {
            pick++;
        }
        if (pick == n) {
            throw NotAStabilizerGroup("generators leave qudit " + std::to_string(j) + " unconstrained");
        }
        std::swap(rows[j], rows[pick]);
        if (rows[j].x(j) == 0) {
            apply(CliffordGate::f(j));
        }
        for (size_t k = j + 1; k < n; k++) {
            if (rows[j].z(k) != 0) {
                if (rows[j].x(k) == 0) {
                    apply(CliffordGate::f(k));
                } else {
                    // Make the qudit-k factor pure X first: S^c adds c*x to z.
                    uint32_t c = f.neg(f.mul(rows[j].z(k), f.inv(rows[j].x(k))));
                    apply(CliffordGate::s(k, c));
                }
            }
            if (rows[j].x(k) != 0) {
                uint32_t c = f.neg(f.mul(rows[j].x(k), f.inv(rows[j].x(j))));
                apply(CliffordGate::sum(j, k, c));
            }
        }
        if (rows[j].z(j) != 0) {
            uint32_t c = f.neg(f.mul(rows[j].z(j), f.inv(rows[j].x(j))));
            apply(CliffordGate::s(j, c));
        }
        apply(CliffordGate::finv(j));
        // Row is now omega^l Z_j^a; rescale to omega^l' Z_j.
        rows[j] = pauli_pow(rows[j], f.inv(rows[j].z(j)));
        for (size_t i = 0; i < n; i++) {
            if (i != j && rows[i].z(j) != 0) {
                rows[i] = pauli_mul(rows[i], pauli_pow(rows[j], f.neg(rows[i].z(j))));
            }
        }
    }
    for (size_t j = 0; j < n; j++) {
        if (rows[j].weight() != 1 || rows[j].z(j) != 1 || rows[j].x(j) != 0) {
            throw InternalInvariantViolation("synthesis did not reach the computational basis");
        }
        if (rows[j].lambda() != 0) {
            apply(CliffordGate::x(j, rows[j].lambda()));
        }
    }

    std::vector<CliffordGate> prep;
    prep.reserve(reduce.size());
    for (size_t i = reduce.size(); i-- > 0;) {
        CliffordGate g = inverse_gate(reduce[i], p);
        // Adjacent inverse pairs cancel.
        if (!prep.empty() && prep.back() == inverse_gate(g, p)) {
            prep.pop_back();
        } else {
            prep.push_back(g);
        }
    }
    return prep;
}

}  // namespace qpbc
