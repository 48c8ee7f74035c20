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

#include "qpbc/hybrid.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "qpbc/errors.h"
#include "qpbc/statevector.h"
#include "qpbc/tableau.h"

namespace qpbc {

std::vector<double> Decomposition::weights() const {
    std::vector<double> w(coefficients.size());
    for (size_t j = 0; j < w.size(); j++) {
        w[j] = std::abs(coefficients[j]) / l1;
    }
    return w;
}

namespace {

Decomposition solve_decomposition(uint32_t p, size_t k, const MagicParams &params, const RomOptions &options) {
    validate_magic_params(p, params);
    Decomposition d;
    d.p = p;
    d.k = k;
    d.params = params;
    if (k == 0) {
        StabilizerStateDesc empty;
        empty.p = p;
        empty.n = 0;
        d.states.push_back(empty);
        d.coefficients.push_back(1.0);
        d.preparations.emplace_back();
        d.l1 = 1.0;
        return d;
    }
    auto basis = stabilizer_basis(p, k, options);
    Eigen::VectorXcd psi = tensor_power(magic_state_vector(p, params), k);
    RomResult r = rom(psi * psi.adjoint(), basis, options);
    for (size_t j = 0; j < basis.size(); j++) {
        if (r.coefficients[j] == 0) {
            continue;
        }
        d.coefficients.push_back(r.coefficients[j]);
        d.states.push_back(basis[j]);
        d.preparations.push_back(synthesize_preparation_circuit(tableau_of(basis[j])));
        d.l1 += std::abs(r.coefficients[j]);
    }
    return d;
}

std::mutex cache_mutex;
std::map<std::tuple<uint32_t, size_t, uint32_t, uint32_t, uint32_t>, Decomposition> cache;

}  // namespace

Decomposition decompose_magic(uint32_t p, size_t k, const MagicParams &params, DecompositionMode mode,
                              const RomOptions &options) {
    if (mode == DecompositionMode::Optimal) {
        return solve_decomposition(p, k, params, options);
    }
    auto key = std::make_tuple(p, k, params.z, params.gamma, params.epsilon);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    Decomposition d = solve_decomposition(p, k, params, options);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, d);
    return d;
}

double eta(uint32_t m, int sign, double l1, uint32_t p) {
    double pd = static_cast<double>(p);
    double geometric = m % p == 0 ? pd - 1 : -1.0;
    return 1.0 / pd + l1 * static_cast<double>(sign) * geometric / pd;
}

double eta_half_range(double l1, uint32_t p, bool conservative) {
    double scale = conservative ? std::max(l1, l1 * l1) : l1;
    return scale * static_cast<double>(p - 1) / static_cast<double>(p);
}

uint64_t plan_samples(double eps, double q_fail, double l1, uint32_t p, bool conservative) {
    if (!(eps > 0) || !(q_fail > 0 && q_fail < 1)) {
        throw ShapeError("plan_samples needs eps > 0 and 0 < q_fail < 1");
    }
    double h = eta_half_range(l1, p, conservative);
    return static_cast<uint64_t>(std::ceil(2.0 * h * h * std::log(2.0 / q_fail) / (eps * eps)));
}

double hoeffding_half_width(uint64_t n, double q_fail, double l1, uint32_t p, bool conservative) {
    if (n == 0) {
        return INFINITY;
    }
    double width = 2.0 * eta_half_range(l1, p, conservative);
    return width * std::sqrt(std::log(2.0 / q_fail) / (2.0 * static_cast<double>(n)));
}

namespace {

void check_program(const HybridProgram &program) {
    validate_magic_params(program.p, program.params);
    if (program.observables.empty()) {
        throw ShapeError("hybrid program has no measurements");
    }
    for (const auto &o : program.observables) {
        if (o.p() != program.p || o.n() != program.t) {
            throw ShapeError("observable " + o.str() + " does not act on " + std::to_string(program.t) +
                             " qudits of dimension " + std::to_string(program.p));
        }
    }
}

void program_branches(const DenseState &state, const std::vector<PauliObservable> &obs, size_t idx, double weight,
                      std::vector<uint32_t> &outcomes, Distribution &out) {
    if (idx == obs.size()) {
        out[outcomes] += weight;
        return;
    }
    auto probs = outcome_probabilities(state, obs[idx]);
    for (uint32_t s = 0; s < probs.size(); s++) {
        if (probs[s] > 1e-14) {
            outcomes.push_back(s);
            program_branches(measure_projector(state, obs[idx], s).post, obs, idx + 1, weight * probs[s], outcomes,
                             out);
            outcomes.pop_back();
        }
    }
}

}  // namespace

Distribution program_distribution(const HybridProgram &program) {
    check_program(program);
    DenseState state(program.p, 0);
    DenseState one = magic_state(program.p, program.params);
    for (size_t q = 0; q < program.t; q++) {
        state = state.tensor(one);
    }
    Distribution out;
    std::vector<uint32_t> outcomes;
    program_branches(state, program.observables, 0, 1.0, outcomes, out);
    return out;
}

double exact_q0(const HybridProgram &program) {
    double q0 = 0;
    for (const auto &[outcomes, prob] : program_distribution(program)) {
        if (outcomes.back() == 0) {
            q0 += prob;
        }
    }
    return q0;
}

SessionProgram reduced_program(const HybridProgram &program, const Decomposition &d, size_t j) {
    if (d.k > program.t) {
        throw ShapeError("cannot virtualize more qudits than the program has");
    }
    if (d.p != program.p || !(d.params == program.params)) {
        throw ShapeError("decomposition does not match the program's magic states");
    }
    SessionProgram sp;
    sp.p = program.p;
    sp.n = d.k;
    sp.magic.assign(program.t - d.k, program.params);
    for (const auto &g : d.preparations.at(j)) {
        sp.elements.push_back(g);
    }
    for (size_t i = 0; i < program.observables.size(); i++) {
        sp.elements.push_back(ProgramMeasure{program.observables[i], false, i});
    }
    return sp;
}

HybridReport hybrid_estimate(const HybridProgram &program, const Decomposition &d, const HybridOptions &options) {
    check_program(program);
    HybridReport report;
    report.p = program.p;
    report.t = program.t;
    report.k = d.k;
    report.l1 = d.l1;
    report.seed = options.seed;
    const auto weights = d.weights();
    const size_t last = program.observables.size() - 1;

    if (options.exhaustive) {
        double expectation = 0;
        for (size_t j = 0; j < d.coefficients.size(); j++) {
            int sign = d.coefficients[j] > 0 ? 1 : -1;
            for (const auto &[outcomes, prob] : enumerate_branches(reduced_program(program, d, j))) {
                expectation += weights[j] * prob * eta(outcomes[last], sign, d.l1, program.p);
            }
        }
        report.q0_hat = expectation;
        report.max_backend_qudits = program.t - d.k;
        return report;
    }

    if (options.samples == 0) {
        throw ShapeError("hybrid sampling needs at least one sample");
    }
    std::vector<double> cumulative(weights.size());
    double acc = 0;
    for (size_t j = 0; j < weights.size(); j++) {
        acc += weights[j];
        cumulative[j] = acc;
    }
    std::vector<SessionProgram> programs;
    for (size_t j = 0; j < d.coefficients.size(); j++) {
        programs.push_back(reduced_program(program, d, j));
    }
    BackendFactory factory = options.backend;
    if (!factory) {
        factory = [](uint32_t p, const std::vector<MagicParams> &magic) -> std::unique_ptr<MagicBackend> {
            return std::make_unique<DenseBackend>(p, magic);
        };
    }

    std::vector<double> etas(options.samples);
    std::vector<size_t> widths(options.samples, 0);
    const size_t workers = std::max<size_t>(1, std::min<uint64_t>(options.workers, options.samples));
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](size_t w) {
        try {
            for (uint64_t i = w; i < options.samples; i += workers) {
                Rng rng = stage_rng(options.seed, "hybrid-sample", i);
                double u = uniform_unit(rng) * acc;
                size_t j = std::min<size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                                cumulative.begin(),
                                            cumulative.size() - 1);
                const SessionProgram &sp = programs[j];
                auto backend = factory(sp.p, sp.magic);
                if (!backend || backend->qudits() != sp.magic.size()) {
                    throw BackendError("backend factory returned a register of the wrong size");
                }
                Transcript tr = run_session(sp, std::move(backend), rng);
                for (const auto &m : tr.magic_program()) {
                    widths[i] = std::max(widths[i], m.n());
                }
                int sign = d.coefficients[j] > 0 ? 1 : -1;
                etas[i] = eta(tr.outcomes.at(last), sign, d.l1, program.p);
            }
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (size_t w = 0; w < workers; w++) {
            threads.emplace_back(work, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    double sum = 0;
    for (double e : etas) {
        sum += e;
    }
    report.samples = options.samples;
    report.q0_hat = sum / static_cast<double>(options.samples);
    report.half_width =
        hoeffding_half_width(options.samples, options.q_fail, d.l1, program.p, options.conservative_range);
    report.max_backend_qudits = *std::max_element(widths.begin(), widths.end());
    return report;
}

}  // namespace qpbc
