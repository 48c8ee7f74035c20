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

#include "qpbc/compiler.h"

#include <cmath>
#include <functional>

#include "qpbc/errors.h"
#include "qpbc/fp_linalg.h"

namespace qpbc {

PauliObservable conjugate_through_correction(const PauliObservable &pauli, uint32_t sigma, const MagicParams &params,
                                             size_t wire) {
    const uint32_t p = pauli.p();
    const size_t n = pauli.n();
    if (wire >= n) {
        throw IndexError("correction wire " + std::to_string(wire) + " out of range");
    }
    PrimeField f(p);
    sigma %= p;
    if (sigma == 0) {
        return pauli;
    }
    // X -> omega^{-sigma (gamma sigma / 2 + z)} X Z^{-gamma sigma}, Z -> omega^sigma Z.
    uint32_t x_phase = f.neg(f.mul(sigma, f.add(f.mul(f.half(), f.mul(params.gamma, sigma)), params.z)));
    PauliObservable x_img = PauliObservable::x_on(p, n, wire);
    x_img.set_z(wire, f.neg(f.mul(params.gamma, sigma)));
    x_img.set_lambda(x_phase);
    PauliObservable z_img = PauliObservable::z_on(p, n, wire);
    z_img.set_lambda(sigma);

    PauliObservable rest = pauli;
    rest.set_x(wire, 0);
    rest.set_z(wire, 0);
    PauliObservable local = pauli_mul(pauli_pow(x_img, pauli.x(wire)), pauli_pow(z_img, pauli.z(wire)));
    return pauli_mul(rest, local);
}

VRecord make_vrecord(const PauliObservable &m, uint32_t sigma, const PauliObservable &a_op, uint32_t a) {
    uint32_t phi = commutation_phase(m, a_op);
    if (phi == 0) {
        throw InternalInvariantViolation("V requires anticommuting M and A");
    }
    PrimeField f(m.p());
    return VRecord{m, f.reduce(sigma), a_op, f.reduce(a), phi};
}

PauliObservable conjugate_through_v(const PauliObservable &r, const VRecord &v) {
    PrimeField f(r.p());
    uint32_t alpha = commutation_phase(v.m, r);
    uint32_t beta = commutation_phase(v.a_op, r);
    uint32_t c = f.mul(f.inv(v.phi), f.sub(alpha, beta));
    if (c == 0 && beta == 0) {
        return r;
    }
    PauliObservable out = pauli_mul(pauli_mul(r, pauli_pow(v.a_op, f.neg(c))), pauli_pow(v.m, c));
    uint32_t extra = f.sub(f.mul(c, f.sub(v.a, v.sigma)), beta);
    out.set_lambda(static_cast<int64_t>(out.lambda()) + extra);
    return out;
}

PauliObservable conjugate_through_v_inverse(const PauliObservable &q, const VRecord &v) {
    PrimeField f(q.p());
    // c(R) = phi^{-1}(phi(M,R) - phi(A,R)) is preserved by the map, so R is
    // Q A^c M^-c up to a phase fixed by the forward formula.
    uint32_t c = f.mul(f.inv(v.phi), f.sub(commutation_phase(v.m, q), commutation_phase(v.a_op, q)));
    PauliObservable r = pauli_mul(pauli_mul(q, pauli_pow(v.a_op, c)), pauli_pow(v.m, f.neg(c)));
    PauliObservable fwd = conjugate_through_v(r, v);
    if (fwd.x() != q.x() || fwd.z() != q.z()) {
        throw InternalInvariantViolation("inverse V conjugation failed to invert");
    }
    r.set_lambda(static_cast<int64_t>(r.lambda()) + q.lambda() - fwd.lambda());
    return r;
}

Eigen::MatrixXcd dense_v(const VRecord &v) {
    const uint32_t p = v.m.p();
    PrimeField f(p);
    Eigen::MatrixXcd mm = dense_matrix(v.m);
    Eigen::MatrixXcd ainv = dense_matrix(v.a_op).adjoint();
    const auto dim = mm.rows();
    Eigen::MatrixXcd mk = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd ak = ainv;  // A^{-k-1}
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint32_t k = 0; k < p; k++) {
        out += root_of_unity(p, f.neg(f.mul(k, f.sub(v.sigma, v.a)))) * (mk * ak);
        mk = (mk * mm).eval();
        ak = (ak * ainv).eval();
    }
    return out * (root_of_unity(p, v.a) / std::sqrt(static_cast<double>(p)));
}

DenseBackend::DenseBackend(uint32_t p, const std::vector<MagicParams> &magic) : state_(p, 0) {
    for (const auto &mp : magic) {
        state_ = state_.tensor(magic_state(p, mp));
    }
}

DenseBackend::DenseBackend(DenseState state) : state_(std::move(state)) {
}

std::optional<std::vector<double>> DenseBackend::probabilities(const PauliObservable &m) const {
    return outcome_probabilities(state_, m);
}

void DenseBackend::collapse(const PauliObservable &m, uint32_t sigma) {
    auto r = measure_projector(state_, m, sigma);
    if (r.probability <= 1e-12) {
        throw BackendError("forced a zero-probability outcome");
    }
    state_ = std::move(r.post);
}

uint32_t DenseBackend::measure(const PauliObservable &m, Rng &rng) {
    auto probs = outcome_probabilities(state_, m);
    double u = uniform_unit(rng);
    double acc = 0;
    uint32_t pick = 0;
    for (uint32_t s = 0; s < probs.size(); s++) {
        if (probs[s] <= 1e-12) {
            continue;
        }
        pick = s;
        acc += probs[s];
        if (u < acc) {
            break;
        }
    }
    collapse(m, pick);
    return pick;
}

std::unique_ptr<MagicBackend> DenseBackend::clone() const {
    return std::make_unique<DenseBackend>(*this);
}

size_t SessionProgram::mid_count() const {
    size_t r = 0;
    for (const auto &e : elements) {
        if (auto m = std::get_if<ProgramMeasure>(&e)) {
            r += m->mid;
        }
    }
    return r;
}

size_t SessionProgram::final_count() const {
    size_t r = 0;
    for (const auto &e : elements) {
        if (auto m = std::get_if<ProgramMeasure>(&e)) {
            r += !m->mid;
        }
    }
    return r;
}

SessionProgram session_program(const GadgetizedCircuit &g) {
    SessionProgram prog;
    prog.p = g.p;
    prog.n = g.n;
    prog.magic = g.magic;
    const size_t w = g.wires();
    size_t final_index = 0;
    for (const auto &e : g.elements) {
        if (auto gate = std::get_if<CliffordGate>(&e)) {
            prog.elements.push_back(*gate);
        } else if (auto c = std::get_if<Correction>(&e)) {
            prog.elements.push_back(*c);
        } else if (auto mm = std::get_if<MidMeasure>(&e)) {
            prog.elements.push_back(ProgramMeasure{PauliObservable::z_on(g.p, w, mm->wire), true, mm->id});
        } else {
            const auto &fm = std::get<FinalMeasure>(e);
            prog.elements.push_back(ProgramMeasure{PauliObservable::z_on(g.p, w, fm.wire), false, final_index++});
        }
    }
    return prog;
}

SessionProgram session_program(uint32_t p, const std::vector<MagicParams> &magic,
                               const std::vector<PauliObservable> &observables) {
    SessionProgram prog;
    prog.p = p;
    prog.n = 0;
    prog.magic = magic;
    for (size_t i = 0; i < observables.size(); i++) {
        if (observables[i].p() != p || observables[i].n() != magic.size()) {
            throw ShapeError("program observable " + std::to_string(i) + " does not act on the magic register");
        }
        prog.elements.push_back(ProgramMeasure{observables[i], false, i});
    }
    return prog;
}

const char *source_name(OutcomeSource s) {
    switch (s) {
        case OutcomeSource::Sampled:
            return "sampled";
        case OutcomeSource::Derived:
            return "derived";
        case OutcomeSource::Backend:
            return "backend";
    }
    return "?";
}

std::vector<PauliObservable> Transcript::magic_program() const {
    std::vector<PauliObservable> out;
    for (const auto &s : steps) {
        if (s.case_number == 3) {
            out.push_back(s.front.slice(n, t));
        }
    }
    return out;
}

Session::Session(uint32_t p, size_t n, size_t t, std::unique_ptr<MagicBackend> backend)
    : p_(PrimeField(p).p()), n_(n), t_(t), backend_(std::move(backend)) {
    if (!backend_ || backend_->qudits() != t) {
        throw ShapeError("backend register does not match the magic wire count");
    }
    for (size_t i = 0; i < n; i++) {
        list_.push_back({PauliObservable::z_on(p, n + t, i), 0, true});
    }
}

Session::Session(const Session &other)
    : p_(other.p_),
      n_(other.n_),
      t_(other.t_),
      list_(other.list_),
      vs_(other.vs_),
      backend_(other.backend_->clone()) {
}

Session &Session::operator=(const Session &other) {
    if (this != &other) {
        p_ = other.p_;
        n_ = other.n_;
        t_ = other.t_;
        list_ = other.list_;
        vs_ = other.vs_;
        backend_ = other.backend_->clone();
    }
    return *this;
}

PauliObservable Session::through_vs(const PauliObservable &m) const {
    PauliObservable r = m;
    for (const auto &v : vs_) {
        r = conjugate_through_v_inverse(r, v);
    }
    return r;
}

Classification Session::classify(const PauliObservable &front) const {
    if (front.n() != n_ + t_ || front.p() != p_) {
        throw ShapeError("front observable has the wrong shape");
    }
    for (size_t i = 0; i < list_.size(); i++) {
        if (!commutes(front, list_[i].op)) {
            return {1, i, 0};
        }
    }
    PrimeField f(p_);
    FpMatrix rows;
    for (const auto &e : list_) {
        rows.push_back(e.op.symplectic());
    }
    if (auto k = fp_solve_combination(f, rows, front.symplectic())) {
        PauliObservable prod = PauliObservable::identity(p_, n_ + t_);
        uint32_t sigma = 0;
        for (size_t j = 0; j < list_.size(); j++) {
            if ((*k)[j]) {
                prod = pauli_mul(prod, pauli_pow(list_[j].op, (*k)[j]));
                sigma = f.add(sigma, f.mul((*k)[j], list_[j].outcome));
            }
        }
        sigma = f.add(sigma, f.sub(front.lambda(), prod.lambda()));
        return {2, 0, sigma};
    }
    return {3, 0, 0};
}

PauliObservable Session::magic_part(const PauliObservable &front) const {
    for (size_t q = 0; q < n_; q++) {
        if (front.x(q) != 0) {
            throw InternalInvariantViolation("Case-3 observable has X support on stabilizer wire " +
                                             std::to_string(q));
        }
    }
    return front.slice(n_, t_);
}

void Session::commit(const PauliObservable &front, const Classification &c, uint32_t sigma) {
    sigma %= p_;
    if (c.case_number == 1) {
        const auto &e = list_[c.pivot];
        vs_.push_back(make_vrecord(front, sigma, e.op, e.outcome));
    } else if (c.case_number == 3) {
        list_.push_back({front, sigma, false});
    }
}

std::pair<Classification, uint32_t> Session::classify_and_execute(const PauliObservable &front, Rng &rng,
                                                                  OutcomeSource *source) {
    Classification c = classify(front);
    uint32_t sigma = 0;
    OutcomeSource src = OutcomeSource::Derived;
    if (c.case_number == 1) {
        sigma = uniform_below(rng, p_);
        src = OutcomeSource::Sampled;
    } else if (c.case_number == 2) {
        sigma = c.derived_sigma;
    } else {
        PauliObservable part = magic_part(front);
        try {
            sigma = backend_->measure(part, rng);
        } catch (const BackendError &) {
            throw;
        } catch (const std::exception &ex) {
            throw BackendError(ex.what());
        }
        src = OutcomeSource::Backend;
    }
    commit(front, c, sigma);
    if (source) {
        *source = src;
    }
    return {c, sigma};
}

namespace {

// Positions of measurements in processing order: mids, then finals.
std::vector<size_t> processing_order(const SessionProgram &prog) {
    std::vector<size_t> order;
    for (int pass = 0; pass < 2; pass++) {
        for (size_t i = 0; i < prog.elements.size(); i++) {
            if (auto m = std::get_if<ProgramMeasure>(&prog.elements[i])) {
                if (m->mid == (pass == 0)) {
                    order.push_back(i);
                }
            }
        }
    }
    return order;
}

// Observable at `pos` pulled back to time zero through the physical elements.
PauliObservable pull_back(const SessionProgram &prog, size_t pos, const std::vector<uint32_t> &mids) {
    PauliObservable r = std::get<ProgramMeasure>(prog.elements[pos]).observable;
    if (r.n() != prog.wires() || r.p() != prog.p) {
        throw ShapeError("program measurement does not span all wires");
    }
    for (size_t i = pos; i-- > 0;) {
        const auto &e = prog.elements[i];
        if (auto g = std::get_if<CliffordGate>(&e)) {
            r = conjugate_backward(*g, r);
        } else if (auto c = std::get_if<Correction>(&e)) {
            // C_sigma^dagger = C_{-sigma}
            r = conjugate_through_correction(r, PrimeField(prog.p).neg(mids.at(c->id)), c->params, c->wire);
        }
    }
    return r;
}

}  // namespace

Transcript run_session(const SessionProgram &program, std::unique_ptr<MagicBackend> backend, Rng &rng,
                       const StepObserver &observer) {
    Transcript tr;
    tr.p = program.p;
    tr.n = program.n;
    tr.t = program.magic.size();
    tr.magic = program.magic;
    Session session(program.p, program.n, tr.t, std::move(backend));
    std::vector<uint32_t> mids(program.mid_count(), 0);
    tr.outcomes.assign(program.final_count(), 0);
    for (size_t pos : processing_order(program)) {
        const auto &pm = std::get<ProgramMeasure>(program.elements[pos]);
        PauliObservable front = session.through_vs(pull_back(program, pos, mids));
        OutcomeSource src;
        auto [c, sigma] = session.classify_and_execute(front, rng, &src);
        tr.steps.push_back({c.case_number, front, sigma, src, pm.mid, pm.id});
        (pm.mid ? mids : tr.outcomes).at(pm.id) = sigma;
        if (observer) {
            observer(session, tr.steps.back());
        }
    }
    return tr;
}

Transcript run_session(const GadgetizedCircuit &g, std::unique_ptr<MagicBackend> backend, Rng &rng,
                       const StepObserver &observer) {
    return run_session(session_program(g), std::move(backend), rng, observer);
}

Distribution enumerate_branches(const SessionProgram &program) {
    const auto order = processing_order(program);
    const uint32_t p = program.p;
    Distribution dist;
    std::vector<uint32_t> mids(program.mid_count(), 0);
    std::vector<uint32_t> finals(program.final_count(), 0);
    std::function<void(size_t, Session &, double)> walk = [&](size_t step, Session &s, double w) {
        if (step == order.size()) {
            dist[finals] += w;
            return;
        }
        const auto &pm = std::get<ProgramMeasure>(program.elements[order[step]]);
        auto &slot = (pm.mid ? mids : finals).at(pm.id);
        PauliObservable front = s.through_vs(pull_back(program, order[step], mids));
        Classification c = s.classify(front);
        if (c.case_number == 2) {
            slot = c.derived_sigma;
            walk(step + 1, s, w);
            return;
        }
        std::vector<double> probs(p, 1.0 / p);
        PauliObservable part(p, 0);
        if (c.case_number == 3) {
            part = s.magic_part(front);
            auto exact = s.backend().probabilities(part);
            if (!exact) {
                throw BackendError("backend cannot report exact probabilities");
            }
            probs = *exact;
        }
        for (uint32_t sigma = 0; sigma < p; sigma++) {
            if (probs[sigma] * w <= 1e-12) {
                continue;
            }
            Session next = s;
            if (c.case_number == 3) {
                next.backend().collapse(part, sigma);
            }
            next.commit(front, c, sigma);
            slot = sigma;
            walk(step + 1, next, w * probs[sigma]);
        }
    };
    Session root(p, program.n, program.magic.size(), std::make_unique<DenseBackend>(p, program.magic));
    walk(0, root, 1.0);
    return dist;
}

Distribution enumerate_branches(const GadgetizedCircuit &g) {
    return enumerate_branches(session_program(g));
}

}  // namespace qpbc
