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

#include <gtest/gtest.h>

#include "qpbc/errors.h"
#include "qpbc/fp_linalg.h"
#include "test_util.h"

using namespace qpbc;
using namespace qpbc::testing;

namespace {

// Dense C_sigma = U X^{-sigma} U^dagger on one qudit.
Eigen::MatrixXcd dense_correction(uint32_t p, const MagicParams &params, uint32_t sigma) {
    Eigen::MatrixXcd u = uv_matrix(p, params);
    Eigen::MatrixXcd x = dense_matrix(PauliObservable::x_on(p, 1, 0, static_cast<int64_t>(p) - sigma));
    return u * x * u.adjoint();
}

VRecord random_vrecord(uint32_t p, size_t n, Rng &rng) {
    while (true) {
        auto m = random_nontrivial_pauli(p, n, rng);
        auto a = random_nontrivial_pauli(p, n, rng);
        if (commutation_phase(m, a) != 0) {
            return make_vrecord(m, uniform_below(rng, p), a, uniform_below(rng, p));
        }
    }
}

std::unique_ptr<MagicBackend> dense_backend(uint32_t p, const std::vector<MagicParams> &magic) {
    return std::make_unique<DenseBackend>(p, magic);
}

void expect_commuting_independent(uint32_t p, const std::vector<PauliObservable> &ops) {
    FpMatrix rows;
    for (size_t i = 0; i < ops.size(); i++) {
        rows.push_back(ops[i].symplectic());
        for (size_t j = 0; j < i; j++) {
            ASSERT_EQ(commutation_phase(ops[i], ops[j]), 0u) << ops[i].str() << " vs " << ops[j].str();
        }
    }
    ASSERT_EQ(fp_rank(PrimeField(p), rows), ops.size());
}

}  // namespace

TEST(compiler, correction_examples) {
    auto x = PauliObservable::x_on(3, 1, 0);
    EXPECT_EQ(conjugate_through_correction(x, 0, {1, 2, 0}, 0), x);
    auto got = conjugate_through_correction(x, 1, {1, 2, 0}, 0);
    EXPECT_EQ(got, PauliObservable(3, 1, {1}, {1}));
    Eigen::MatrixXcd c = dense_correction(3, {1, 2, 0}, 1);
    EXPECT_LT(max_abs_diff(dense_matrix(got), c * dense_matrix(x) * c.adjoint()), 1e-12);

    auto z = PauliObservable::z_on(5, 1, 0);
    EXPECT_EQ(conjugate_through_correction(z, 2, {1, 4, 0}, 0), PauliObservable(5, 2, {0}, {1}));
}

TEST(compiler, correction_matches_dense_all_params) {
    Rng rng(71);
    for (uint32_t p : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 100; trial++) {
            MagicParams params = random_magic_params(p, rng);
            uint32_t sigma = uniform_below(rng, p);
            auto m = random_pauli(p, 2, rng);
            auto got = conjugate_through_correction(m, sigma, params, 1);
            Eigen::MatrixXcd c1 = dense_correction(p, params, sigma);
            Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(p * p, p * p);
            for (uint32_t i = 0; i < p; i++) {
                c.block(i * p, i * p, p, p) = c1;
            }
            ASSERT_LT(max_abs_diff(dense_matrix(got), c * dense_matrix(m) * c.adjoint()), 1e-10)
                << "p=" << p << " sigma=" << sigma << " " << m.str();
        }
    }
}

TEST(compiler, v_examples) {
    const uint32_t p = 3;
    auto x = PauliObservable::x_on(p, 1, 0);
    auto z = PauliObservable::z_on(p, 1, 0);
    for (uint32_t sigma : {1u, 2u}) {
        VRecord v = make_vrecord(x, sigma, z, 0);
        Eigen::MatrixXcd dv = dense_v(v);
        for (const auto &r : {x, z, PauliObservable(p, 0, {1}, {1})}) {
            auto got = conjugate_through_v(r, v);
            EXPECT_LT(max_abs_diff(dense_matrix(got), dv * dense_matrix(r) * dv.adjoint()), 1e-12) << r.str();
        }
    }
    // R commuting with both M and A is left alone.
    auto m = PauliObservable(p, 0, {1, 0}, {0, 0});
    auto a = PauliObservable(p, 0, {0, 0}, {1, 0});
    auto r = PauliObservable(p, 2, {0, 1}, {0, 2});
    EXPECT_EQ(conjugate_through_v(r, make_vrecord(m, 1, a, 2)), r);
    EXPECT_THROW(make_vrecord(m, 0, m, 0), InternalInvariantViolation);
}

TEST(compiler, v_properties) {
    Rng rng(72);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t p = trial % 2 ? 3 : 5;
        size_t n = 1 + uniform_below(rng, 2);
        VRecord v = random_vrecord(p, n, rng);
        Eigen::MatrixXcd dv = dense_v(v);
        size_t dim = dv.rows();
        ASSERT_LT(max_abs_diff(dv.adjoint() * dv, Eigen::MatrixXcd::Identity(dim, dim)), 1e-10);
        // The A eigenstate with eigenvalue omega^a maps into the M eigenspace
        // with eigenvalue omega^sigma.
        for (int probe = 0; probe < 3; probe++) {
            DenseState psi = random_state(p, n, rng);
            PauliObservable a_scaled = v.a_op;
            a_scaled.set_lambda(static_cast<int64_t>(a_scaled.lambda()) - v.a);
            auto proj = measure_projector(psi, a_scaled, 0);
            if (proj.probability < 1e-6) {
                continue;
            }
            Eigen::VectorXcd out = dv * proj.post.amplitudes();
            Eigen::VectorXcd m_out = dense_matrix(v.m) * out;
            ASSERT_LT((m_out - std::polar(1.0, 2 * std::acos(-1.0) * v.sigma / p) * out).norm(), 1e-10);
        }
        size_t count = 1;
        for (size_t i = 0; i < 2 * n; i++) {
            count *= p;
        }
        for (size_t code = 0; code < count; code++) {
            std::vector<int64_t> x(n), z(n);
            size_t c = code;
            for (size_t q = 0; q < n; q++) {
                x[q] = static_cast<int64_t>(c % p);
                c /= p;
                z[q] = static_cast<int64_t>(c % p);
                c /= p;
            }
            PauliObservable r(p, 0, x, z);
            auto got = conjugate_through_v(r, v);
            ASSERT_LT(max_abs_diff(dense_matrix(got), dv * dense_matrix(r) * dv.adjoint()), 1e-10)
                << r.str() << " through V(" << v.m.str() << ", " << v.a_op.str() << ")";
            ASSERT_EQ(conjugate_through_v_inverse(got, v), r);
        }
    }
}

TEST(compiler, classification_examples) {
    Rng rng(73);
    SessionProgram dummy{3, 1, {}, {ProgramMeasure{PauliObservable::z_on(3, 1, 0), false, 0}}};
    auto t = run_session(dummy, dense_backend(3, {}), rng);
    ASSERT_EQ(t.steps.size(), 1u);
    EXPECT_EQ(t.steps[0].case_number, 2);
    EXPECT_EQ(t.steps[0].sigma, 0u);
    EXPECT_EQ(t.steps[0].source, OutcomeSource::Derived);

    SessionProgram x{3, 1, {}, {ProgramMeasure{PauliObservable::x_on(3, 1, 0), false, 0}}};
    std::vector<int> counts(3, 0);
    for (int i = 0; i < 3000; i++) {
        auto tx = run_session(x, dense_backend(3, {}), rng);
        EXPECT_EQ(tx.steps[0].case_number, 1);
        EXPECT_EQ(tx.steps[0].source, OutcomeSource::Sampled);
        counts[tx.outcomes[0]]++;
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 1000, 150);
    }

    // State |2>|1>: Z1 gives 2, Z2 gives 1, Z1 Z2 gives 2 + 1 = 0 mod 3.
    SessionProgram zz{3,
                      2,
                      {},
                      {CliffordGate::x(0, 2), CliffordGate::x(1, 1),
                       ProgramMeasure{PauliObservable::z_on(3, 2, 0), false, 0},
                       ProgramMeasure{PauliObservable::z_on(3, 2, 1), false, 1},
                       ProgramMeasure{PauliObservable(3, 0, {0, 0}, {1, 1}), false, 2}}};
    auto tz = run_session(zz, dense_backend(3, {}), rng);
    EXPECT_EQ(tz.outcomes, (std::vector<uint32_t>{2, 1, 0}));
    for (const auto &s : tz.steps) {
        EXPECT_EQ(s.case_number, 2);
    }
}

TEST(compiler, clifford_only_has_no_backend_steps) {
    Rng rng(74);
    for (int trial = 0; trial < 50; trial++) {
        auto c = random_circuit(3, 1 + uniform_below(rng, 3), 0, 2, rng);
        auto t = run_session(gadgetize(c), dense_backend(3, {}), rng);
        EXPECT_TRUE(t.magic_program().empty());
        for (const auto &s : t.steps) {
            EXPECT_NE(s.case_number, 3);
        }
    }
}

TEST(compiler, single_gadget_at_most_one_backend_step) {
    Rng rng(75);
    auto g = gadgetize(parse_circuit("qudits 1 dim 3\nUV 0 1 2 0\nMEASURE 0\n"));
    for (int i = 0; i < 20; i++) {
        auto t = run_session(g, dense_backend(3, g.magic), rng);
        EXPECT_LE(t.magic_program().size(), 1u);
    }
}

TEST(compiler, list_and_transcript_invariants) {
    Rng rng(76);
    for (int trial = 0; trial < 500; trial++) {
        uint32_t p = trial % 2 ? 3 : 5;
        size_t n = 1 + uniform_below(rng, 3);
        size_t t = uniform_below(rng, 5);
        if (p == 5 && n + t > 6) {
            t = 6 - n;
        }
        auto c = random_circuit(p, n, t, 1 + uniform_below(rng, static_cast<uint32_t>(n)), rng);
        auto g = gadgetize(c);
        auto observer = [&](const Session &s, const TranscriptStep &step) {
            std::vector<PauliObservable> ops;
            for (const auto &e : s.list()) {
                ops.push_back(e.op);
            }
            expect_commuting_independent(p, ops);
            ASSERT_GE(step.case_number, 1);
            ASSERT_LE(step.case_number, 3);
        };
        auto tr = run_session(g, dense_backend(p, g.magic), rng, observer);
        auto program = tr.magic_program();
        ASSERT_LE(program.size(), g.t());
        expect_commuting_independent(p, program);
        for (const auto &s : tr.steps) {
            if (s.case_number == 3) {
                // Stabilizer-wire part is Z-type.
                for (size_t q = 0; q < tr.n; q++) {
                    ASSERT_EQ(s.front.x(q), 0u) << s.front.str();
                }
            }
        }
    }
}

TEST(compiler, end_to_end_matches_dense) {
    Rng rng(77);
    for (int trial = 0; trial < 60; trial++) {
        uint32_t p = trial % 2 ? 3 : 5;
        size_t n = 1 + uniform_below(rng, 2);
        auto c = random_circuit(p, n, uniform_below(rng, 4), 1 + uniform_below(rng, static_cast<uint32_t>(n)), rng);
        auto expected = distribution(c);
        auto got = enumerate_branches(gadgetize(c));
        double total = 0;
        for (const auto &[k, v] : got) {
            total += v;
        }
        ASSERT_NEAR(total, 1.0, 1e-9);
        ASSERT_LE(total_variation(expected, got), 1e-9) << render_circuit(c);
    }
}

TEST(compiler, enumerate_examples) {
    auto point = enumerate_branches(gadgetize(parse_circuit("qudits 1 dim 3\nX 0 2\nMEASURE 0\n")));
    ASSERT_EQ(point.size(), 1u);
    EXPECT_NEAR(point.at({2}), 1.0, 1e-12);
    auto uniform = enumerate_branches(gadgetize(parse_circuit("qudits 1 dim 3\nF 0\nMEASURE 0\n")));
    ASSERT_EQ(uniform.size(), 3u);
    for (const auto &[k, v] : uniform) {
        EXPECT_NEAR(v, 1.0 / 3, 1e-12);
    }
}

TEST(compiler, session_is_deterministic_per_seed) {
    Rng gen(78);
    auto g = gadgetize(random_circuit(3, 2, 3, 2, gen));
    Rng a(5), b(5);
    auto ta = run_session(g, dense_backend(3, g.magic), a);
    auto tb = run_session(g, dense_backend(3, g.magic), b);
    ASSERT_EQ(ta.steps.size(), tb.steps.size());
    EXPECT_EQ(ta.outcomes, tb.outcomes);
    for (size_t i = 0; i < ta.steps.size(); i++) {
        EXPECT_EQ(ta.steps[i].front, tb.steps[i].front);
        EXPECT_EQ(ta.steps[i].sigma, tb.steps[i].sigma);
    }
}

TEST(compiler, sampled_frequencies_match_enumeration) {
    Rng gen(79);
    auto c = random_circuit(3, 2, 2, 2, gen);
    auto g = gadgetize(c);
    auto exact = enumerate_branches(g);
    Distribution freq;
    const int runs = 6000;
    Rng rng(80);
    for (int i = 0; i < runs; i++) {
        freq[run_session(g, dense_backend(3, g.magic), rng).outcomes] += 1.0 / runs;
    }
    EXPECT_LT(total_variation(exact, freq), 0.05);
}
