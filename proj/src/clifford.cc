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

#include "qpbc/clifford.h"

#include <sstream>

#include "qpbc/errors.h"

namespace qpbc {

const char *gate_mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::F:
            return "F";
        case GateKind::FINV:
            return "FINV";
        case GateKind::S:
            return "S";
        case GateKind::SINV:
            return "SINV";
        case GateKind::SUM:
            return "SUM";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
    }
    return "?";
}

void validate_gate(const CliffordGate &g, uint32_t p, size_t n) {
    if (g.target >= n || (g.is_two_qudit() && g.control >= n)) {
        throw IndexError(std::string(gate_mnemonic(g.kind)) + " addresses a qudit outside [0, " + std::to_string(n) + ")");
    }
    if (g.is_two_qudit() && g.control == g.target) {
        throw IndexError("SUM control and target coincide");
    }
    bool fourier = g.kind == GateKind::F || g.kind == GateKind::FINV;
    uint32_t order = fourier ? 4 : p;
    if (g.power == 0 || g.power % order == 0) {
        throw ShapeError(std::string(gate_mnemonic(g.kind)) + " power " + std::to_string(g.power) +
                         " is trivial or out of range");
    }
}

CliffordGate inverse_gate(const CliffordGate &g, uint32_t p) {
    CliffordGate r = g;
    switch (g.kind) {
        case GateKind::F:
            r.kind = GateKind::FINV;
            break;
        case GateKind::FINV:
            r.kind = GateKind::F;
            break;
        case GateKind::S:
            r.kind = GateKind::SINV;
            break;
        case GateKind::SINV:
            r.kind = GateKind::S;
            break;
        case GateKind::SUM:
        case GateKind::X:
        case GateKind::Z:
            r.power = p - g.power % p;
            break;
    }
    return r;
}

namespace {

// Image of a single-qudit or SUM generator under one application of the base
// gate; `is_z` selects X (false) or Z (true) on `q`.
PauliObservable base_image(GateKind kind, size_t n, uint32_t p, size_t q, bool is_z, size_t control, size_t target) {
    PauliObservable img(p, n);
    switch (kind) {
        case GateKind::F:
            // X -> Z, Z -> X^dagger
            if (!is_z) {
                img.set_z(q, 1);
            } else {
                img.set_x(q, -1);
            }
            break;
        case GateKind::FINV:
            // X -> Z^dagger, Z -> X
            if (!is_z) {
                img.set_z(q, -1);
            } else {
                img.set_x(q, 1);
            }
            break;
        case GateKind::S:
            // X -> XZ, Z -> Z
            img.set_x(q, is_z ? 0 : 1);
            img.set_z(q, 1);
            break;
        case GateKind::SINV:
            // X -> X Z^dagger, Z -> Z
            img.set_x(q, is_z ? 0 : 1);
            img.set_z(q, is_z ? 1 : -1);
            break;
        case GateKind::X:
            // Z -> omega^-1 Z
            if (!is_z) {
                img.set_x(q, 1);
            } else {
                img.set_z(q, 1);
                img.set_lambda(-1);
            }
            break;
        case GateKind::Z:
            // X -> omega X
            if (!is_z) {
                img.set_x(q, 1);
                img.set_lambda(1);
            } else {
                img.set_z(q, 1);
            }
            break;
        case GateKind::SUM:
            // X_c -> X_c X_t, X_t -> X_t, Z_c -> Z_c, Z_t -> Z_c^dagger Z_t
            if (!is_z) {
                img.set_x(q, 1);
                if (q == control) {
                    img.set_x(target, 1);
                }
            } else {
                img.set_z(q, 1);
                if (q == target) {
                    img.set_z(control, -1);
                }
            }
            break;
    }
    return img;
}

PauliObservable apply_base(GateKind kind, size_t target, size_t control, const PauliObservable &pauli) {
    const uint32_t p = pauli.p();
    const size_t n = pauli.n();
    std::vector<size_t> support{target};
    if (kind == GateKind::SUM) {
        support.push_back(control);
    }
    // P = omega^lambda * rest * local, where local lives on the gate support.
    PauliObservable result(p, n);
    result.set_lambda(pauli.lambda());
    for (size_t q = 0; q < n; q++) {
        bool on_support = q == target || (kind == GateKind::SUM && q == control);
        if (!on_support) {
            result.set_x(q, pauli.x(q));
            result.set_z(q, pauli.z(q));
        }
    }
    // local = prod_q X_q^{x_q} * prod_q Z_q^{z_q}; all X factors commute with
    // each other, likewise Z, so images can be multiplied in this order.
    PauliObservable local(p, n);
    for (size_t q : support) {
        local = pauli_mul(local, pauli_pow(base_image(kind, n, p, q, false, control, target), pauli.x(q)));
    }
    for (size_t q : support) {
        local = pauli_mul(local, pauli_pow(base_image(kind, n, p, q, true, control, target), pauli.z(q)));
    }
    return pauli_mul(result, local);
}

}  // namespace

PauliObservable conjugate_forward(const CliffordGate &g, const PauliObservable &pauli) {
    validate_gate(g, pauli.p(), pauli.n());
    bool fourier = g.kind == GateKind::F || g.kind == GateKind::FINV;
    uint32_t reps = g.power % (fourier ? 4 : pauli.p());
    PauliObservable r = pauli;
    for (uint32_t i = 0; i < reps; i++) {
        r = apply_base(g.kind, g.target, g.control, r);
    }
    return r;
}

PauliObservable conjugate_backward(const CliffordGate &g, const PauliObservable &pauli) {
    return conjugate_forward(inverse_gate(g, pauli.p()), pauli);
}

PauliObservable conjugate_observable(const std::vector<CliffordGate> &gates, const PauliObservable &pauli,
                                     Direction direction) {
    PauliObservable r = pauli;
    if (direction == Direction::Forward) {
        for (const auto &g : gates) {
            r = conjugate_forward(g, r);
        }
    } else {
        for (size_t i = gates.size(); i-- > 0;) {
            r = conjugate_backward(gates[i], r);
        }
    }
    return r;
}

std::string gate_str(const CliffordGate &g) {
    std::stringstream ss;
    ss << gate_mnemonic(g.kind) << " ";
    if (g.is_two_qudit()) {
        ss << g.control << " ";
    }
    ss << g.target;
    if (g.power != 1) {
        ss << " " << g.power;
    }
    return ss.str();
}

}  // namespace qpbc
