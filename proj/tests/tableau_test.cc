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

#include <gtest/gtest.h>

#include <cmath>

#include "qpbc/errors.h"
#include "qpbc/fp_linalg.h"
#include "test_util.h"

using namespace qpbc;
using namespace qpbc::testing;

namespace {

StabilizerTableau run_gates(uint32_t p, size_t n, const std::vector<CliffordGate> &gates) {
    auto t = StabilizerTableau::zero_state(p, n);
    for (const auto &g : gates) {
        t = apply_gate(t, g);
    }
    return t;
}

DenseState run_dense(uint32_t p, size_t n, const std::vector<CliffordGate> &gates) {
    DenseState s(p, n);
    for (const auto &g : gates) {
        s.apply(g);
    }
    return s;
}

// Every generator fixes the state.
void expect_stabilizes(const StabilizerTableau &t, const Eigen::VectorXcd &psi) {
    for (const auto &g : t.generators()) {
        ASSERT_LT((dense_matrix(g) * psi - psi).norm(), 1e-10) << g.str();
    }
}

void expect_valid(const StabilizerTableau &t) {
    const auto &gens = t.generators();
    FpMatrix rows;
    for (size_t i = 0; i < gens.size(); i++) {
        rows.push_back(gens[i].symplectic());
        for (size_t j = 0; j < gens.size(); j++) {
            ASSERT_EQ(commutation_phase(gens[i], gens[j]), 0u);
        }
    }
    ASSERT_EQ(fp_rank(PrimeField(t.p()), rows), t.n());
}

}  // namespace

TEST(tableau, apply_gate_examples) {
    const uint32_t p = 3;
    auto t = apply_gate(StabilizerTableau::zero_state(p, 1), CliffordGate::f(0));
    EXPECT_EQ(t.generators()[0], PauliObservable::x_on(p, 1, 0, p - 1));

    StabilizerTableau xi(p, {PauliObservable::x_on(p, 2, 0), PauliObservable::z_on(p, 2, 1)});
    auto after = apply_gate(xi, CliffordGate::sum(0, 1));
    EXPECT_EQ(after.generators()[0], PauliObservable(p, 0, {1, 1}, {0, 0}));

    StabilizerTableau x(p, {PauliObservable::x_on(p, 1, 0)});
    EXPECT_EQ(apply_gate(x, CliffordGate::s(0)).generators()[0], PauliObservable(p, 0, {1}, {1}));
}

TEST(tableau, apply_gate_index_error) {
    EXPECT_THROW(apply_gate(StabilizerTableau::zero_state(3, 1), CliffordGate::f(1)), IndexError);
}

TEST(tableau, invalid_groups_rejected) {
    EXPECT_THROW(StabilizerTableau(3, {PauliObservable::x_on(3, 1, 0), PauliObservable::z_on(3, 1, 0)}),
                 NotAStabilizerGroup);
    EXPECT_THROW(StabilizerTableau(3, {PauliObservable::z_on(3, 2, 0), PauliObservable::z_on(3, 2, 0, 2)}),
                 NotAStabilizerGroup);
}

TEST(tableau, random_sequences_stay_valid) {
    Rng rng(31);
    for (uint32_t p : {3u, 5u}) {
        for (size_t n = 1; n <= 4; n++) {
            for (int trial = 0; trial < 5; trial++) {
                auto t = StabilizerTableau::zero_state(p, n);
                for (int step = 0; step < 100; step++) {
                    t = apply_gate(t, random_gate(p, n, rng));
                    expect_valid(t);
                }
            }
        }
    }
}

TEST(tableau, generators_stabilize_dense_state) {
    Rng rng(32);
    for (uint32_t p : {3u, 5u}) {
        for (size_t n = 1; n <= 3; n++) {
            for (int trial = 0; trial < 10; trial++) {
                auto gates = random_gates(p, n, 20, rng);
                expect_stabilizes(run_gates(p, n, gates), run_dense(p, n, gates).amplitudes());
            }
        }
    }
}

TEST(tableau, measure_examples) {
    const uint32_t p = 3;
    Rng rng(33);
    auto zero = StabilizerTableau::zero_state(p, 1);
    auto r = measure_pauli(zero, PauliObservable::z_on(p, 1, 0), rng);
    EXPECT_EQ(r.sigma, 0u);
    EXPECT_TRUE(r.deterministic);

    // Dense projector norms of X on |0>.
    auto probs = outcome_probabilities(DenseState(p, 1), PauliObservable::x_on(p, 1, 0));
    for (double q : probs) {
        EXPECT_NEAR(q, 1.0 / 3, 1e-12);
    }
    std::vector<int> counts(p, 0);
    const int draws = 9000;
    for (int i = 0; i < draws; i++) {
        auto m = measure_pauli(zero, PauliObservable::x_on(p, 1, 0), rng);
        EXPECT_FALSE(m.deterministic);
        counts[m.sigma]++;
    }
    for (int c : counts) {
        EXPECT_NEAR(c, draws / 3, 300);
    }

    StabilizerTableau t(p, {PauliObservable(p, -2, {0, 0}, {1, 0}), PauliObservable(p, -1, {0, 0}, {0, 1})});
    auto zz = measure_pauli(t, PauliObservable(p, 0, {0, 0}, {1, 1}), rng);
    EXPECT_EQ(zz.sigma, 0u);
    EXPECT_TRUE(zz.deterministic);
}

TEST(tableau, measure_matches_dense_projectors) {
    Rng rng(34);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t p = trial % 2 == 0 ? 3 : 5;
        size_t n = 1 + uniform_below(rng, 3);
        auto gates = random_gates(p, n, 15, rng);
        auto t = run_gates(p, n, gates);
        DenseState psi = run_dense(p, n, gates);
        auto m = random_pauli(p, n, rng);
        if (m.is_trivial()) {
            continue;
        }
        auto probs = outcome_probabilities(psi, m);
        auto r = measure_pauli(t, m, rng);
        if (r.deterministic) {
            for (uint32_t s = 0; s < p; s++) {
                ASSERT_NEAR(probs[s], s == r.sigma ? 1.0 : 0.0, 1e-10);
            }
        } else {
            for (uint32_t s = 0; s < p; s++) {
                ASSERT_NEAR(probs[s], 1.0 / p, 1e-10);
            }
        }
        auto post = measure_projector(psi, m, r.sigma);
        expect_valid(r.tableau);
        expect_stabilizes(r.tableau, post.post.amplitudes());
        auto again = measure_pauli(r.tableau, m, rng);
        ASSERT_TRUE(again.deterministic);
        ASSERT_EQ(again.sigma, r.sigma);
    }
}

TEST(tableau, eigenvalue_exponent) {
    const uint32_t p = 5;
    StabilizerTableau t(p, {PauliObservable(p, 2, {0}, {1})});
    // omega^2 Z |psi> = |psi>, so Z |psi> = omega^{-2} |psi>.
    EXPECT_EQ(t.eigenvalue_exponent(PauliObservable::z_on(p, 1, 0)), std::optional<uint32_t>(3));
    EXPECT_EQ(t.eigenvalue_exponent(PauliObservable::z_on(p, 1, 0, 2)), std::optional<uint32_t>(1));
    EXPECT_FALSE(t.eigenvalue_exponent(PauliObservable::x_on(p, 1, 0)).has_value());
}

TEST(tableau, synthesis_examples) {
    EXPECT_TRUE(synthesize_preparation_circuit(StabilizerTableau::zero_state(3, 4)).empty());

    StabilizerTableau plus(3, {PauliObservable::x_on(3, 1, 0)});
    auto gates = synthesize_preparation_circuit(plus);
    DenseState s = run_dense(3, 1, gates);
    Eigen::VectorXcd expected = Eigen::VectorXcd::Constant(3, 1.0 / std::sqrt(3.0));
    EXPECT_LT(infidelity(s.amplitudes(), expected), 1e-12);

    StabilizerTableau ghz(3, {PauliObservable(3, 0, {1, 1}, {0, 0}), PauliObservable(3, 0, {0, 0}, {2, 1})});
    auto ghz_gates = synthesize_preparation_circuit(ghz);
    DenseState g = run_dense(3, 2, ghz_gates);
    Eigen::VectorXcd ghz_vec = Eigen::VectorXcd::Zero(9);
    ghz_vec[0] = ghz_vec[4] = ghz_vec[8] = 1.0 / std::sqrt(3.0);
    EXPECT_LT(infidelity(g.amplitudes(), ghz_vec), 1e-12);
    EXPECT_TRUE(run_gates(3, 2, ghz_gates).same_state(ghz));
}

TEST(tableau, synthesis_round_trip) {
    Rng rng(35);
    for (uint32_t p : {3u, 5u, 7u}) {
        for (size_t n = 1; n <= 4; n++) {
            for (int trial = 0; trial < 25; trial++) {
                auto target = run_gates(p, n, random_gates(p, n, 30, rng));
                auto gates = synthesize_preparation_circuit(target);
                for (const auto &g : gates) {
                    validate_gate(g, p, n);
                }
                ASSERT_TRUE(run_gates(p, n, gates).same_state(target));
            }
        }
    }
}

TEST(tableau, synthesis_matches_dense_state) {
    Rng rng(36);
    for (uint32_t p : {3u, 5u}) {
        for (size_t n = 1; n <= 3; n++) {
            for (int trial = 0; trial < 10; trial++) {
                auto gates = random_gates(p, n, 25, rng);
                auto target = run_gates(p, n, gates);
                DenseState expected = run_dense(p, n, gates);
                DenseState got = run_dense(p, n, synthesize_preparation_circuit(target));
                ASSERT_LT(infidelity(got.amplitudes(), expected.amplitudes()), 1e-10);
            }
        }
    }
}
