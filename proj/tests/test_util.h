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

#ifndef QPBC_TESTS_TEST_UTIL_H
#define QPBC_TESTS_TEST_UTIL_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qpbc/circuit.h"
#include "qpbc/clifford.h"
#include "qpbc/pauli.h"
#include "qpbc/rng.h"
#include "qpbc/statevector.h"

namespace qpbc::testing {

inline PauliObservable random_pauli(uint32_t p, size_t n, Rng &rng, bool random_phase = true) {
    std::vector<int64_t> x(n), z(n);
    for (size_t q = 0; q < n; q++) {
        x[q] = uniform_below(rng, p);
        z[q] = uniform_below(rng, p);
    }
    return PauliObservable(p, random_phase ? uniform_below(rng, p) : 0, x, z);
}

/// A random Pauli with x or z nonzero somewhere.
inline PauliObservable random_nontrivial_pauli(uint32_t p, size_t n, Rng &rng, bool random_phase = true) {
    while (true) {
        PauliObservable m = random_pauli(p, n, rng, random_phase);
        if (!m.is_trivial()) {
            return m;
        }
    }
}

inline CliffordGate random_gate(uint32_t p, size_t n, Rng &rng) {
    static const GateKind single[] = {GateKind::F, GateKind::FINV, GateKind::S, GateKind::SINV, GateKind::X,
                                      GateKind::Z};
    uint32_t power = 1 + uniform_below(rng, p - 1);
    if (n >= 2 && uniform_below(rng, 3) == 0) {
        size_t c = uniform_below(rng, static_cast<uint32_t>(n));
        size_t t = (c + 1 + uniform_below(rng, static_cast<uint32_t>(n - 1))) % n;
        return CliffordGate::sum(c, t, power);
    }
    GateKind kind = single[uniform_below(rng, 6)];
    if (kind == GateKind::F || kind == GateKind::FINV) {
        power = 1 + uniform_below(rng, 3);
    }
    return CliffordGate{kind, uniform_below(rng, static_cast<uint32_t>(n)), 0, power};
}

inline std::vector<CliffordGate> random_gates(uint32_t p, size_t n, size_t count, Rng &rng) {
    std::vector<CliffordGate> out;
    for (size_t i = 0; i < count; i++) {
        out.push_back(random_gate(p, n, rng));
    }
    return out;
}

inline MagicParams random_magic_params(uint32_t p, Rng &rng) {
    return MagicParams{uniform_below(rng, p), 1 + uniform_below(rng, p - 1), uniform_below(rng, p)};
}

/// Random Clifford+U_v circuit: `t` U_v gates interleaved with Cliffords, then
/// `m` distinct qudits measured at the end.
inline CircuitIR random_circuit(uint32_t p, size_t n, size_t t, size_t m, Rng &rng) {
    CircuitIR c;
    c.p = p;
    c.n = n;
    for (size_t i = 0; i <= t; i++) {
        size_t len = 1 + uniform_below(rng, 4);
        for (size_t j = 0; j < len; j++) {
            c.ops.push_back(random_gate(p, n, rng));
        }
        if (i < t) {
            c.ops.push_back(UvGate{uniform_below(rng, static_cast<uint32_t>(n)), random_magic_params(p, rng)});
        }
    }
    std::vector<size_t> order(n);
    for (size_t q = 0; q < n; q++) {
        order[q] = q;
    }
    for (size_t q = n; q > 1; q--) {
        std::swap(order[q - 1], order[uniform_below(rng, static_cast<uint32_t>(q))]);
    }
    for (size_t i = 0; i < m && i < n; i++) {
        c.ops.push_back(Measure{order[i]});
    }
    return c;
}

/// m pairwise commuting, independent observables on t qudits: U Z_i U^dagger
/// for a random Clifford U, with random phases.
inline std::vector<PauliObservable> random_commuting_program(uint32_t p, size_t t, size_t m, Rng &rng) {
    auto gates = random_gates(p, t, 6 * t + 4, rng);
    std::vector<PauliObservable> out;
    for (size_t i = 0; i < m && i < t; i++) {
        auto z = PauliObservable::z_on(p, t, i, 1 + uniform_below(rng, p - 1));
        z.set_lambda(uniform_below(rng, p));
        out.push_back(conjugate_observable(gates, z, Direction::Forward));
    }
    return out;
}

inline DenseState random_state(uint32_t p, size_t n, Rng &rng) {
    std::normal_distribution<double> normal;
    DenseState s(p, n);
    for (Eigen::Index i = 0; i < s.amplitudes().size(); i++) {
        s.amplitudes()[i] = std::complex<double>(normal(rng), normal(rng));
    }
    s.normalize();
    return s;
}

/// Unitary of a gate sequence (first gate applied first), column by column.
inline Eigen::MatrixXcd circuit_unitary(uint32_t p, size_t n, const std::vector<CliffordGate> &gates) {
    DenseState probe(p, n);
    size_t dim = probe.dim();
    Eigen::MatrixXcd u(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
        e[static_cast<Eigen::Index>(col)] = 1;
        DenseState s(p, n, e);
        for (const auto &g : gates) {
            s.apply(g);
        }
        u.col(static_cast<Eigen::Index>(col)) = s.amplitudes();
    }
    return u;
}

inline double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// 1 - |<a|b>|^2 / (|a|^2 |b|^2).
inline double infidelity(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) {
    std::complex<double> overlap = a.dot(b);
    return 1.0 - std::norm(overlap) / (a.squaredNorm() * b.squaredNorm());
}

}  // namespace qpbc::testing

#endif
