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

#include <gtest/gtest.h>

#include "qpbc/errors.h"
#include "test_util.h"

using namespace qpbc;
using namespace qpbc::testing;

namespace {

Eigen::MatrixXcd forward_dense(const std::vector<CliffordGate> &gates, const PauliObservable &m) {
    Eigen::MatrixXcd u = circuit_unitary(m.p(), m.n(), gates);
    return u * dense_matrix(m) * u.adjoint();
}

}  // namespace

TEST(clifford, table_examples) {
    for (uint32_t p : {3u, 5u, 7u}) {
        auto x = PauliObservable::x_on(p, 1, 0);
        auto z = PauliObservable::z_on(p, 1, 0);
        EXPECT_EQ(conjugate_forward(CliffordGate::f(0), x), z);
        EXPECT_EQ(conjugate_forward(CliffordGate::f(0), z), PauliObservable::x_on(p, 1, 0, p - 1));
        EXPECT_EQ(conjugate_forward(CliffordGate::s(0), x), PauliObservable(p, 0, {1}, {1}));
        EXPECT_EQ(conjugate_forward(CliffordGate::s(0), z), z);

        auto sum = CliffordGate::sum(0, 1);
        EXPECT_EQ(conjugate_forward(sum, PauliObservable::x_on(p, 2, 0)), PauliObservable(p, 0, {1, 1}, {0, 0}));
        EXPECT_EQ(conjugate_forward(sum, PauliObservable::x_on(p, 2, 1)), PauliObservable::x_on(p, 2, 1));
        EXPECT_EQ(conjugate_forward(sum, PauliObservable::z_on(p, 2, 0)), PauliObservable::z_on(p, 2, 0));
        EXPECT_EQ(conjugate_forward(sum, PauliObservable::z_on(p, 2, 1)), PauliObservable(p, 0, {0, 0}, {p - 1, 1}));
    }
}

TEST(clifford, observable_examples) {
    const uint32_t p = 3;
    auto z = PauliObservable::z_on(p, 1, 0);
    auto back = conjugate_observable({CliffordGate::f(0)}, z, Direction::Backward);
    EXPECT_EQ(back.z(0), 0u);
    EXPECT_NE(back.x(0), 0u);
    Eigen::MatrixXcd f = circuit_unitary(p, 1, {CliffordGate::f(0)});
    EXPECT_LT(max_abs_diff(dense_matrix(back), f.adjoint() * dense_matrix(z) * f), 1e-12);

    EXPECT_EQ(conjugate_observable({}, z, Direction::Forward), z);
    EXPECT_EQ(conjugate_observable({}, z, Direction::Backward), z);

    auto z2 = PauliObservable::z_on(p, 2, 1);
    std::vector<CliffordGate> sum = {CliffordGate::sum(0, 1)};
    auto fwd = conjugate_observable(sum, z2, Direction::Forward);
    EXPECT_EQ(fwd, PauliObservable(p, 0, {0, 0}, {p - 1, 1}));
    auto bwd = conjugate_observable(sum, z2, Direction::Backward);
    EXPECT_EQ(bwd.x(0), 0u);
    EXPECT_EQ(bwd.x(1), 0u);
    Eigen::MatrixXcd u = circuit_unitary(p, 2, sum);
    EXPECT_LT(max_abs_diff(dense_matrix(bwd), u.adjoint() * dense_matrix(z2) * u), 1e-12);
}

TEST(clifford, dense_conjugation_random) {
    Rng rng(21);
    for (int trial = 0; trial < 500; trial++) {
        const uint32_t p = 3;
        size_t n = 1 + uniform_below(rng, 3);
        auto gates = random_gates(p, n, 1 + uniform_below(rng, 8), rng);
        auto m = random_pauli(p, n, rng);
        auto fwd = conjugate_observable(gates, m, Direction::Forward);
        ASSERT_LT(max_abs_diff(dense_matrix(fwd), forward_dense(gates, m)), 1e-12) << m.str();
        Eigen::MatrixXcd u = circuit_unitary(p, n, gates);
        auto bwd = conjugate_observable(gates, m, Direction::Backward);
        ASSERT_LT(max_abs_diff(dense_matrix(bwd), u.adjoint() * dense_matrix(m) * u), 1e-12) << m.str();
    }
}

TEST(clifford, every_kind_and_power_at_p5_p7) {
    Rng rng(22);
    for (uint32_t p : {5u, 7u}) {
        for (GateKind kind : {GateKind::F, GateKind::FINV, GateKind::S, GateKind::SINV, GateKind::SUM, GateKind::X,
                              GateKind::Z}) {
            uint32_t order = kind == GateKind::F || kind == GateKind::FINV ? 4 : p;
            for (uint32_t power = 1; power < order; power++) {
                CliffordGate g = kind == GateKind::SUM ? CliffordGate::sum(1, 0, power) : CliffordGate{kind, 1, 0, power};
                auto m = random_pauli(p, 2, rng);
                ASSERT_LT(max_abs_diff(dense_matrix(conjugate_forward(g, m)), forward_dense({g}, m)), 1e-10)
                    << gate_str(g) << " " << m.str();
                ASSERT_EQ(conjugate_backward(g, conjugate_forward(g, m)), m);
                ASSERT_EQ(conjugate_forward(inverse_gate(g, p), m), conjugate_backward(g, m));
            }
        }
    }
}

TEST(clifford, validation) {
    EXPECT_THROW(validate_gate(CliffordGate::f(2), 3, 2), IndexError);
    EXPECT_THROW(validate_gate(CliffordGate::sum(0, 0), 3, 2), IndexError);
    EXPECT_THROW(validate_gate(CliffordGate::x(0, 3), 3, 1), ShapeError);
    EXPECT_THROW(validate_gate(CliffordGate::x(0, 0), 3, 1), ShapeError);
    EXPECT_NO_THROW(validate_gate(CliffordGate::sum(1, 0, 2), 3, 2));
}
