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

#include "qpbc/emitter.h"

#include <algorithm>
#include <sstream>

#include "qpbc/errors.h"

namespace qpbc {

uint32_t LinearRule::evaluate(const std::vector<uint32_t> &m, uint32_t p) const {
    PrimeField f(p);
    uint32_t r = f.reduce(constant);
    for (const auto &[id, coef] : terms) {
        r = f.add(r, f.mul(f.reduce(coef), m.at(id) % p));
    }
    return r;
}

uint32_t KScaling::reinterpret(uint32_t sigma_prime, uint32_t p) const {
    PrimeField f(p);
    return f.add(f.mul(inverse_k, sigma_prime % p), offset);
}

size_t sum_cost(const PauliObservable &m) {
    size_t cost = 0;
    for (size_t j = 0; j < m.n(); j++) {
        cost += m.x(j) != 0 ? m.x(j) : m.z(j);
    }
    return cost;
}

KScaling optimize_k(const PauliObservable &m) {
    if (m.is_trivial()) {
        throw NoOpObservable("cannot measure an observable proportional to the identity");
    }
    const uint32_t p = m.p();
    PrimeField f(p);
    KScaling best{1, m, 1, 0};
    size_t best_cost = sum_cost(m);
    for (uint32_t k = 2; k < p; k++) {
        PauliObservable scaled(p, 0);
        std::vector<int64_t> x(m.n()), z(m.n());
        for (size_t j = 0; j < m.n(); j++) {
            x[j] = static_cast<int64_t>(k) * m.x(j);
            z[j] = static_cast<int64_t>(k) * m.z(j);
        }
        scaled = PauliObservable(p, static_cast<int64_t>(k) * m.lambda(), x, z);
        size_t cost = sum_cost(scaled);
        if (cost < best_cost) {
            best_cost = cost;
            // sigma = k^{-1} sigma' + x.z (k - 1) / 2
            uint32_t offset = f.mul(f.mul(m.xz_dot(), k - 1), f.half());
            best = KScaling{k, scaled, f.inv(k), offset};
        }
    }
    return best;
}

namespace {

class Builder {
   public:
    Builder(uint32_t p, size_t comp, size_t anc) {
        c_.p = p;
        c_.comp_wires = comp;
        c_.anc_wires = anc;
    }

    void gate(const CliffordGate &g) {
        validate_gate(g, c_.p, c_.wires());
        c_.elements.push_back(g);
    }
    size_t measure(size_t wire) {
        size_t id = c_.measurement_count++;
        c_.elements.push_back(AncillaMeasure{wire, id});
        return id;
    }
    void reset(size_t wire) {
        c_.elements.push_back(AncillaReset{wire});
    }
    void cx(size_t wire, LinearRule rule) {
        c_.elements.push_back(ConditionalX{wire, std::move(rule)});
    }
    size_t combine(LinearRule rule) {
        size_t out = c_.output_count++;
        c_.elements.push_back(ClassicalCombine{out, std::move(rule)});
        return out;
    }
    AdaptiveCircuit &circuit() {
        return c_;
    }

    // Controlled-M^k from `control` onto computational wire j: the wire's
    // factor X^c Z^d is realized as c (or d) SUM gates between basis changes.
    void controlled_local(size_t control, size_t j, uint32_t c, uint32_t d) {
        PrimeField f(c_.p);
        if (c == 0 && d == 0) {
            return;
        }
        if (d == 0) {
            gate(CliffordGate::sum(control, j, c));
        } else if (c == 0) {
            gate(CliffordGate::finv(j));
            gate(CliffordGate::sum(control, j, d));
            gate(CliffordGate::f(j));
        } else {
            uint32_t h = f.half();
            uint32_t hd = f.mul(h, d);
            uint32_t e = f.mul(f.inv(c), d);
            gate(CliffordGate::x(j, h));
            gate(CliffordGate::z(j, hd));
            gate(CliffordGate::sinv(j, e));
            gate(CliffordGate::sum(control, j, c));
            gate(CliffordGate::s(j, e));
            gate(CliffordGate::z(j, f.neg(hd)));
            gate(CliffordGate::x(j, f.neg(h)));
        }
    }

   private:
    AdaptiveCircuit c_;
};

void check_program(const std::vector<PauliObservable> &program) {
    if (program.empty()) {
        return;
    }
    for (const auto &m : program) {
        if (m.p() != program[0].p() || m.n() != program[0].n()) {
            throw ShapeError("program observables disagree on p or wire count");
        }
    }
}

// Chooses the observable to realize in hardware and the rule turning raw
// ancilla outcomes into sigma.
KScaling scaling_for(const PauliObservable &m, const EmitOptions &options) {
    if (options.optimize_k && !m.is_trivial()) {
        return optimize_k(m);
    }
    return KScaling{1, m, 1, 0};
}

LinearRule outcome_rule(const PauliObservable &emitted, const KScaling &ks, const std::vector<size_t> &ids,
                        uint32_t p) {
    PrimeField f(p);
    // Raw sum s of ancilla outcomes measures the phase-free operator, so the
    // emitted observable has sigma' = s + lambda'.
    LinearRule rule;
    rule.constant = f.add(f.mul(ks.inverse_k, emitted.lambda()), ks.offset);
    for (size_t id : ids) {
        rule.terms.push_back({id, ks.inverse_k});
    }
    return rule;
}

void append_ghz(Builder &b, size_t offset, size_t t, uint32_t p) {
    if (t == 1) {
        b.gate(CliffordGate::f(offset));
        return;
    }
    const size_t even = t % 2 == 0 ? t : t - 1;
    const size_t pairs = even / 2;
    auto first = [&](size_t k) { return offset + 2 * k; };
    auto second = [&](size_t k) { return offset + 2 * k + 1; };
    for (size_t k = 0; k < pairs; k++) {
        b.gate(CliffordGate::f(first(k)));
    }
    for (size_t k = 0; k < pairs; k++) {
        b.gate(CliffordGate::sum(first(k), second(k)));
    }
    if (pairs > 1) {
        for (size_t k = 0; k + 1 < pairs; k++) {
            b.gate(CliffordGate::sum(second(k), first(k + 1)));
        }
        std::vector<size_t> ids(pairs, 0);
        for (size_t k = 1; k < pairs; k++) {
            ids[k] = b.measure(first(k));
        }
        PrimeField f(p);
        for (size_t k = 1; k < pairs; k++) {
            // X^{sum_{j<=k} (-1)^{k-j+1} m_j}
            LinearRule rule;
            for (size_t j = 1; j <= k; j++) {
                rule.terms.push_back({ids[j], (k - j) % 2 == 0 ? p - 1 : 1});
            }
            b.cx(second(k), rule);
        }
        for (size_t k = 0; k + 1 < pairs; k += 2) {
            b.gate(CliffordGate::sum(second(k), second(k + 1), 2 % p));
        }
        for (size_t k = 1; k < pairs; k++) {
            b.reset(first(k));
        }
        for (size_t k = 0; k + 1 < pairs; k++) {
            b.gate(CliffordGate::sum(second(k), first(k + 1)));
        }
    }
    if (even != t) {
        b.gate(CliffordGate::sum(offset + even - 1, offset + even));
    }
}

}  // namespace

AdaptiveCircuit emit_method1(const std::vector<PauliObservable> &program, const EmitOptions &options) {
    check_program(program);
    const uint32_t p = program.empty() ? 3 : program[0].p();
    const size_t t = program.empty() ? 0 : program[0].n();
    Builder b(p, t, 1);
    const size_t anc = t;
    for (const auto &m : program) {
        KScaling ks = scaling_for(m, options);
        const PauliObservable &em = ks.scaled;
        ObservableMeta meta{m, em, ks.k, 0};
        if (em.is_trivial()) {
            meta.output = b.combine(LinearRule{em.lambda(), {}});
        } else {
            b.gate(CliffordGate::f(anc));
            for (size_t j = 0; j < t; j++) {
                b.controlled_local(anc, j, em.x(j), em.z(j));
            }
            b.gate(CliffordGate::finv(anc));
            size_t id = b.measure(anc);
            meta.output = b.combine(outcome_rule(em, ks, {id}, p));
            b.reset(anc);
        }
        b.circuit().meta.push_back(meta);
    }
    return std::move(b.circuit());
}

AdaptiveCircuit emit_method2(const std::vector<PauliObservable> &program, const EmitOptions &options) {
    check_program(program);
    const uint32_t p = program.empty() ? 3 : program[0].p();
    const size_t t = program.empty() ? 0 : program[0].n();
    Builder b(p, t, t);
    for (const auto &m : program) {
        KScaling ks = scaling_for(m, options);
        const PauliObservable &em = ks.scaled;
        ObservableMeta meta{m, em, ks.k, 0};
        if (em.is_trivial()) {
            meta.output = b.combine(LinearRule{em.lambda(), {}});
        } else {
            append_ghz(b, t, t, p);
            for (size_t j = 0; j < t; j++) {
                b.controlled_local(t + j, j, em.x(j), em.z(j));
            }
            std::vector<size_t> ids;
            for (size_t j = 0; j < t; j++) {
                b.gate(CliffordGate::finv(t + j));
            }
            for (size_t j = 0; j < t; j++) {
                ids.push_back(b.measure(t + j));
            }
            meta.output = b.combine(outcome_rule(em, ks, ids, p));
            for (size_t j = 0; j < t; j++) {
                b.reset(t + j);
            }
        }
        b.circuit().meta.push_back(meta);
    }
    return std::move(b.circuit());
}

AdaptiveCircuit ghz_prep_circuit(size_t t, uint32_t p) {
    PrimeField f(p);
    if (t < 2) {
        throw ShapeError("GHZ preparation needs at least 2 qudits, got " + std::to_string(t));
    }
    Builder b(p, 0, t);
    append_ghz(b, 0, t, p);
    return std::move(b.circuit());
}

GateStats stats(const AdaptiveCircuit &c) {
    GateStats s;
    std::vector<size_t> depth(c.wires(), 0);
    auto occupy = [&](std::initializer_list<size_t> wires, size_t cost) {
        size_t start = 0;
        for (size_t w : wires) {
            start = std::max(start, depth.at(w));
        }
        for (size_t w : wires) {
            depth[w] = start + cost;
        }
    };
    for (const auto &e : c.elements) {
        if (auto g = std::get_if<CliffordGate>(&e)) {
            if (g->is_two_qudit()) {
                s.sum_count += g->power;
                occupy({g->control, g->target}, g->power);
            } else {
                occupy({g->target}, 1);
            }
        } else if (auto m = std::get_if<AncillaMeasure>(&e)) {
            occupy({m->wire}, 1);
        } else if (auto r = std::get_if<AncillaReset>(&e)) {
            occupy({r->wire}, 1);
        } else if (auto x = std::get_if<ConditionalX>(&e)) {
            occupy({x->wire}, 1);
        }
    }
    for (size_t d : depth) {
        s.depth = std::max(s.depth, d);
    }
    return s;
}

namespace {

std::string rule_str(const LinearRule &r) {
    std::stringstream ss;
    ss << r.constant;
    for (const auto &[id, coef] : r.terms) {
        ss << " " << coef << "*m" << id;
    }
    return ss.str();
}

}  // namespace

std::string render_adaptive(const AdaptiveCircuit &c) {
    std::stringstream ss;
    ss << "qudits " << c.wires() << " dim " << c.p << "\n";
    ss << "ancillas " << c.anc_wires << "  # wires " << c.comp_wires << " and up\n";
    for (size_t w = 0; w < c.inputs.size(); w++) {
        if (c.inputs[w]) {
            ss << "INPUT " << w << " " << c.inputs[w]->z << " " << c.inputs[w]->gamma << " " << c.inputs[w]->epsilon
               << "\n";
        }
    }
    for (const auto &e : c.elements) {
        if (auto g = std::get_if<CliffordGate>(&e)) {
            ss << gate_str(*g) << "\n";
        } else if (auto m = std::get_if<AncillaMeasure>(&e)) {
            ss << "MEASURE_ANC " << m->wire << " " << m->id << "\n";
        } else if (auto r = std::get_if<AncillaReset>(&e)) {
            ss << "RESET " << r->wire << "\n";
        } else if (auto x = std::get_if<ConditionalX>(&e)) {
            ss << "CX " << x->wire << " " << rule_str(x->power) << "\n";
        } else {
            const auto &cc = std::get<ClassicalCombine>(e);
            ss << "CCOMBINE " << cc.output << " " << rule_str(cc.rule) << "\n";
        }
    }
    return ss.str();
}

}  // namespace qpbc
