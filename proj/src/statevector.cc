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

#include "qpbc/statevector.h"

#include <cmath>
#include <functional>

#include "qpbc/errors.h"

namespace qpbc {

namespace {

constexpr double kPrune = 1e-12;

}  // namespace

DenseState::DenseState(uint32_t p, size_t n) : p_(PrimeField(p).p()), n_(n) {
    size_t dim = checked_dimension(p, n, oracle_limit());
    amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    amps_(0) = 1.0;
    strides_.assign(n, 1);
    for (size_t q = n; q-- > 1;) {
        strides_[q - 1] = strides_[q] * p;
    }
}

DenseState::DenseState(uint32_t p, size_t n, Eigen::VectorXcd amplitudes) : DenseState(p, n) {
    if (static_cast<size_t>(amplitudes.size()) != dim()) {
        throw ShapeError("amplitude vector has length " + std::to_string(amplitudes.size()) + ", expected " +
                         std::to_string(dim()));
    }
    amps_ = std::move(amplitudes);
}

uint32_t DenseState::digit(size_t index, size_t q) const {
    return static_cast<uint32_t>((index / strides_[q]) % p_);
}

size_t DenseState::stride(size_t q) const {
    return strides_[q];
}

void DenseState::apply_local(size_t q, const Eigen::MatrixXcd &u) {
    if (q >= n_) {
        throw IndexError("qudit " + std::to_string(q) + " out of range");
    }
    const size_t s = strides_[q];
    const size_t block = s * p_;
    Eigen::VectorXcd in(p_), out(p_);
    for (size_t base = 0; base < dim(); base += block) {
        for (size_t off = 0; off < s; off++) {
            for (uint32_t j = 0; j < p_; j++) {
                in(j) = amps_(base + off + j * s);
            }
            out.noalias() = u * in;
            for (uint32_t j = 0; j < p_; j++) {
                amps_(base + off + j * s) = out(j);
            }
        }
    }
}

Eigen::MatrixXcd fourier_matrix(uint32_t p) {
    Eigen::MatrixXcd f(p, p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (uint32_t k = 0; k < p; k++) {
        for (uint32_t j = 0; j < p; j++) {
            f(k, j) = scale * root_of_unity(p, static_cast<int64_t>(j) * k);
        }
    }
    return f;
}

Eigen::MatrixXcd phase_gate_matrix(uint32_t p) {
    PrimeField f(p);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(p, p);
    for (uint32_t j = 0; j < p; j++) {
        uint32_t e = f.mul(f.mul(j, f.reduce(static_cast<int64_t>(j) - 1)), f.half());
        s(j, j) = root_of_unity(p, e);
    }
    return s;
}

Eigen::MatrixXcd uv_matrix(uint32_t p, const MagicParams &params) {
    auto v = uv_exponent_vector(p, params);
    uint32_t order = uv_root_order(p);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(p, p);
    for (uint32_t j = 0; j < p; j++) {
        u(j, j) = root_of_unity(order, v[j]);
    }
    return u;
}

void DenseState::apply(const CliffordGate &g) {
    validate_gate(g, p_, n_);
    switch (g.kind) {
        case GateKind::F:
        case GateKind::FINV: {
            Eigen::MatrixXcd f = fourier_matrix(p_);
            if (g.kind == GateKind::FINV) {
                f = f.adjoint().eval();
            }
            for (uint32_t i = 0; i < g.power % 4; i++) {
                apply_local(g.target, f);
            }
            return;
        }
        case GateKind::S:
        case GateKind::SINV: {
            Eigen::MatrixXcd s = phase_gate_matrix(p_);
            if (g.kind == GateKind::SINV) {
                s = s.adjoint().eval();
            }
            for (uint32_t i = 0; i < g.power % p_; i++) {
                apply_local(g.target, s);
            }
            return;
        }
        case GateKind::X:
            apply_pauli(PauliObservable::x_on(p_, n_, g.target, g.power));
            return;
        case GateKind::Z:
            apply_pauli(PauliObservable::z_on(p_, n_, g.target, g.power));
            return;
        case GateKind::SUM: {
            Eigen::VectorXcd out(amps_.size());
            const size_t st = strides_[g.target];
            for (size_t i = 0; i < dim(); i++) {
                uint32_t c = digit(i, g.control);
                uint32_t t = digit(i, g.target);
                uint32_t nt = static_cast<uint32_t>((t + static_cast<uint64_t>(g.power) * c) % p_);
                size_t j = i - t * st + nt * st;
                out(j) = amps_(i);
            }
            amps_ = std::move(out);
            return;
        }
    }
}

void DenseState::apply_uv(size_t q, const MagicParams &params) {
    apply_local(q, uv_matrix(p_, params));
}

void DenseState::apply_uv_dagger(size_t q, const MagicParams &params) {
    apply_local(q, uv_matrix(p_, params).adjoint());
}

void DenseState::apply_correction(size_t q, const MagicParams &params, uint32_t sigma) {
    apply_uv_dagger(q, params);
    uint32_t shift = PrimeField(p_).neg(sigma % p_);
    if (shift) {
        apply(CliffordGate::x(q, shift));
    }
    apply_uv(q, params);
}

void DenseState::apply_pauli(const PauliObservable &pauli) {
    if (pauli.p() != p_ || pauli.n() != n_) {
        throw ShapeError("Pauli shape does not match state");
    }
    // omega^lambda X(x) Z(z) |j> = omega^{lambda + z.j} |j + x>
    Eigen::VectorXcd out(amps_.size());
    std::vector<std::complex<double>> roots(p_);
    for (uint32_t k = 0; k < p_; k++) {
        roots[k] = root_of_unity(p_, k);
    }
    for (size_t i = 0; i < dim(); i++) {
        uint64_t phase = pauli.lambda();
        size_t j = 0;
        for (size_t q = 0; q < n_; q++) {
            uint32_t d = digit(i, q);
            phase += static_cast<uint64_t>(pauli.z(q)) * d;
            j += ((d + pauli.x(q)) % p_) * strides_[q];
        }
        out(j) = roots[phase % p_] * amps_(i);
    }
    amps_ = std::move(out);
}

std::vector<double> DenseState::z_probabilities(size_t q) const {
    std::vector<double> probs(p_, 0.0);
    for (size_t i = 0; i < dim(); i++) {
        probs[digit(i, q)] += std::norm(amps_(i));
    }
    return probs;
}

double DenseState::collapse_z(size_t q, uint32_t value) {
    double prob = 0;
    for (size_t i = 0; i < dim(); i++) {
        if (digit(i, q) != value) {
            amps_(i) = 0;
        } else {
            prob += std::norm(amps_(i));
        }
    }
    if (prob > kPrune) {
        amps_ /= std::sqrt(prob);
    }
    return prob;
}

void DenseState::normalize() {
    double nrm = norm();
    if (nrm <= 0) {
        throw NormalizationError("cannot normalize the zero vector");
    }
    amps_ /= nrm;
}

double DenseState::fidelity(const DenseState &other) const {
    if (other.dim() != dim()) {
        throw ShapeError("fidelity between states of different dimension");
    }
    return std::norm(amps_.dot(other.amps_));
}

DenseState DenseState::tensor(const DenseState &other) const {
    if (other.p_ != p_) {
        throw ShapeError("tensor product of states with different p");
    }
    DenseState r(p_, n_ + other.n_);
    for (size_t i = 0; i < dim(); i++) {
        for (size_t j = 0; j < other.dim(); j++) {
            r.amps_(i * other.dim() + j) = amps_(i) * other.amps_(j);
        }
    }
    return r;
}

DenseState magic_state(uint32_t p, const MagicParams &params) {
    DenseState s(p, 1);
    s.apply(CliffordGate::f(0));
    s.apply_uv(0, params);
    return s;
}

ProjectorResult measure_projector(const DenseState &state, const PauliObservable &m, uint32_t sigma) {
    const uint32_t p = state.p();
    PrimeField f(p);
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(state.amplitudes().size());
    DenseState power = state;  // M^k |psi>
    for (uint32_t k = 0; k < p; k++) {
        if (k > 0) {
            power.apply_pauli(m);
        }
        acc += root_of_unity(p, f.neg(f.mul(k, sigma % p))) * power.amplitudes();
    }
    acc /= static_cast<double>(p);
    double prob = acc.squaredNorm();
    if (prob > kPrune) {
        acc /= std::sqrt(prob);
    }
    return {prob, DenseState(p, state.n(), std::move(acc))};
}

std::vector<double> outcome_probabilities(const DenseState &state, const PauliObservable &m) {
    std::vector<double> out(state.p());
    for (uint32_t s = 0; s < state.p(); s++) {
        out[s] = measure_projector(state, m, s).probability;
    }
    return out;
}

double total_variation(const Distribution &a, const Distribution &b) {
    double tv = 0;
    for (const auto &[k, v] : a) {
        auto it = b.find(k);
        tv += std::abs(v - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto &[k, v] : b) {
        if (!a.count(k)) {
            tv += std::abs(v);
        }
    }
    return tv / 2;
}

Distribution distribution(const CircuitIR &c) {
    validate_circuit(c);
    Distribution dist;
    std::vector<uint32_t> outcomes;
    std::function<void(size_t, DenseState, double)> walk = [&](size_t i, DenseState s, double w) {
        for (; i < c.ops.size(); i++) {
            const auto &op = c.ops[i];
            if (auto g = std::get_if<CliffordGate>(&op)) {
                s.apply(*g);
            } else if (auto u = std::get_if<UvGate>(&op)) {
                s.apply_uv(u->target, u->params);
            } else {
                size_t q = std::get<Measure>(op).target;
                auto probs = s.z_probabilities(q);
                for (uint32_t v = 0; v < c.p; v++) {
                    if (probs[v] * w <= kPrune) {
                        continue;
                    }
                    DenseState next = s;
                    next.collapse_z(q, v);
                    outcomes.push_back(v);
                    walk(i + 1, std::move(next), w * probs[v]);
                    outcomes.pop_back();
                }
                return;
            }
        }
        dist[outcomes] += w;
    };
    walk(0, DenseState(c.p, c.n), 1.0);
    return dist;
}

std::vector<GadgetBranch> gadget_branches(const GadgetizedCircuit &g, const DenseState &data_input) {
    if (data_input.n() != g.n || data_input.p() != g.p) {
        throw ShapeError("data input does not match the circuit's data register");
    }
    DenseState start = data_input;
    for (const auto &mp : g.magic) {
        start = start.tensor(magic_state(g.p, mp));
    }
    std::vector<GadgetBranch> out;
    std::vector<uint32_t> mids(g.t(), 0);
    std::vector<uint32_t> finals;
    std::function<void(size_t, DenseState, double)> walk = [&](size_t i, DenseState s, double w) {
        for (; i < g.elements.size(); i++) {
            const auto &e = g.elements[i];
            if (auto gate = std::get_if<CliffordGate>(&e)) {
                s.apply(*gate);
            } else if (auto c = std::get_if<Correction>(&e)) {
                s.apply_correction(c->wire, c->params, mids[c->id]);
            } else {
                bool mid = std::holds_alternative<MidMeasure>(e);
                size_t wire = mid ? std::get<MidMeasure>(e).wire : std::get<FinalMeasure>(e).wire;
                auto probs = s.z_probabilities(wire);
                for (uint32_t v = 0; v < g.p; v++) {
                    if (probs[v] * w <= kPrune) {
                        continue;
                    }
                    DenseState next = s;
                    next.collapse_z(wire, v);
                    if (mid) {
                        mids[std::get<MidMeasure>(e).id] = v;
                    } else {
                        finals.push_back(v);
                    }
                    walk(i + 1, std::move(next), w * probs[v]);
                    if (!mid) {
                        finals.pop_back();
                    }
                }
                return;
            }
        }
        out.push_back({w, mids, finals, std::move(s)});
    };
    walk(0, start, 1.0);
    return out;
}

Distribution distribution(const GadgetizedCircuit &g) {
    Distribution dist;
    for (const auto &b : gadget_branches(g, DenseState(g.p, g.n))) {
        dist[b.final_outcomes] += b.probability;
    }
    return dist;
}

DenseState adaptive_initial_state(const AdaptiveCircuit &c) {
    DenseState s(c.p, 0);
    for (size_t w = 0; w < c.wires(); w++) {
        if (w < c.inputs.size() && c.inputs[w]) {
            s = s.tensor(magic_state(c.p, *c.inputs[w]));
        } else {
            s = s.tensor(DenseState(c.p, 1));
        }
    }
    return s;
}

std::vector<AdaptiveBranch> adaptive_branches(const AdaptiveCircuit &c, const DenseState &initial) {
    if (initial.n() != c.wires() || initial.p() != c.p) {
        throw ShapeError("initial state does not match the adaptive circuit");
    }
    std::vector<AdaptiveBranch> out;
    std::vector<uint32_t> record(c.measurement_count, 0);
    std::vector<uint32_t> outputs(c.output_count, 0);
    std::function<void(size_t, DenseState, double)> walk = [&](size_t i, DenseState s, double w) {
        for (; i < c.elements.size(); i++) {
            const auto &e = c.elements[i];
            if (auto gate = std::get_if<CliffordGate>(&e)) {
                s.apply(*gate);
            } else if (auto cx = std::get_if<ConditionalX>(&e)) {
                uint32_t k = cx->power.evaluate(record, c.p);
                if (k) {
                    s.apply(CliffordGate::x(cx->wire, k));
                }
            } else if (auto cc = std::get_if<ClassicalCombine>(&e)) {
                outputs[cc->output] = cc->rule.evaluate(record, c.p);
            } else {
                bool is_reset = std::holds_alternative<AncillaReset>(e);
                size_t wire = is_reset ? std::get<AncillaReset>(e).wire : std::get<AncillaMeasure>(e).wire;
                auto probs = s.z_probabilities(wire);
                std::vector<uint32_t> saved_record = record;
                for (uint32_t v = 0; v < c.p; v++) {
                    if (probs[v] * w <= kPrune) {
                        continue;
                    }
                    DenseState next = s;
                    next.collapse_z(wire, v);
                    if (is_reset) {
                        if (v) {
                            next.apply(CliffordGate::x(wire, c.p - v));
                        }
                    } else {
                        record[std::get<AncillaMeasure>(e).id] = v;
                    }
                    std::vector<uint32_t> saved_outputs = outputs;
                    walk(i + 1, std::move(next), w * probs[v]);
                    outputs = saved_outputs;
                    record = saved_record;
                }
                return;
            }
        }
        out.push_back({w, record, outputs, std::move(s)});
    };
    walk(0, initial, 1.0);
    return out;
}

Distribution distribution(const AdaptiveCircuit &c) {
    Distribution dist;
    for (const auto &b : adaptive_branches(c, adaptive_initial_state(c))) {
        dist[b.outputs] += b.probability;
    }
    return dist;
}

}  // namespace qpbc
