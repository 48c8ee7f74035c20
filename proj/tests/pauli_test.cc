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

#include "qpbc/pauli.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qpbc/errors.h"
#include "test_util.h"

using namespace qpbc;
using namespace qpbc::testing;

namespace {

const double kPi = std::acos(-1.0);

std::complex<double> omega(uint32_t p, int64_t k) {
    return std::polar(1.0, 2 * kPi * static_cast<double>(k) / p);
}

// Single-qudit shift and clock matrices written out directly.
Eigen::MatrixXcd shift(uint32_t p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p, p);
    for (uint32_t j = 0; j < p; j++) {
        m((j + 1) % p, j) = 1;
    }
    return m;
}

Eigen::MatrixXcd clock(uint32_t p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p, p);
    for (uint32_t j = 0; j < p; j++) {
        m(j, j) = omega(p, j);
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd oracle(const PauliObservable &p) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t q = 0; q < p.n(); q++) {
        Eigen::MatrixXcd local = Eigen::MatrixXcd::Identity(p.p(), p.p());
        for (uint32_t k = 0; k < p.x(q); k++) {
            local = local * shift(p.p());
        }
        for (uint32_t k = 0; k < p.z(q); k++) {
            local = local * clock(p.p());
        }
        out = kron(out, local);
    }
    return omega(p.p(), p.lambda()) * out;
}

}  // namespace

TEST(pauli, mul_examples) {
    auto x = PauliObservable::x_on(3, 1, 0);
    auto z = PauliObservable::z_on(3, 1, 0);
    auto zx = pauli_mul(z, x);
    EXPECT_EQ(zx, PauliObservable(3, 1, {1}, {1}));
    EXPECT_LT(max_abs_diff(oracle(z) * oracle(x), oracle(zx)), 1e-12);

    auto id = PauliObservable::identity(3, 1);
    auto p = PauliObservable(3, 2, {1}, {2});
    EXPECT_EQ(pauli_mul(id, p), p);

    auto x2 = PauliObservable::x_on(5, 1, 0, 2);
    auto x4 = PauliObservable::x_on(5, 1, 0, 4);
    EXPECT_EQ(pauli_mul(x2, x4), PauliObservable::x_on(5, 1, 0));
}

TEST(pauli, mul_dimension_mismatch) {
    EXPECT_THROW(pauli_mul(PauliObservable::identity(3, 1), PauliObservable::identity(3, 2)), ShapeError);
    EXPECT_THROW(pauli_mul(PauliObservable::identity(3, 1), PauliObservable::identity(5, 1)), ShapeError);
    EXPECT_THROW(commutation_phase(PauliObservable::identity(3, 1), PauliObservable::identity(3, 2)), ShapeError);
}

TEST(pauli, pow_examples) {
    auto xz = PauliObservable(5, 0, {1}, {1});
    EXPECT_TRUE(pauli_pow(xz, 0).is_identity());
    auto sq = pauli_pow(xz, 2);
    EXPECT_EQ(sq, PauliObservable(5, 1, {2}, {2}));
    EXPECT_LT(max_abs_diff(oracle(xz) * oracle(xz), oracle(sq)), 1e-12);
    EXPECT_TRUE(pauli_pow(PauliObservable::z_on(3, 1, 0), 3).is_identity());
}

TEST(pauli, commutation_examples) {
    for (uint32_t p : {3u, 5u, 7u}) {
        auto x = PauliObservable::x_on(p, 1, 0);
        auto z = PauliObservable::z_on(p, 1, 0);
        uint32_t phi = commutation_phase(x, z);
        EXPECT_EQ(phi, p - 1);
        // XZ = omega^phi ZX as matrices.
        EXPECT_LT(max_abs_diff(oracle(x) * oracle(z), omega(p, phi) * oracle(z) * oracle(x)), 1e-12);
    }
    EXPECT_EQ(commutation_phase(PauliObservable::z_on(3, 2, 0), PauliObservable::z_on(3, 2, 1)), 0u);
    auto xz = PauliObservable(3, 0, {1}, {1});
    EXPECT_EQ(commutation_phase(xz, xz), 0u);
}

TEST(pauli, dense_matrix_examples) {
    auto z = dense_matrix(PauliObservable::z_on(3, 1, 0));
    for (int j = 0; j < 3; j++) {
        EXPECT_LT(std::abs(z(j, j) - omega(3, j)), 1e-12);
    }
    EXPECT_LT(max_abs_diff(dense_matrix(PauliObservable::identity(3, 2)), Eigen::MatrixXcd::Identity(9, 9)), 1e-12);
    auto x = dense_matrix(PauliObservable::x_on(3, 1, 0));
    for (int j = 0; j < 3; j++) {
        EXPECT_LT(std::abs(x((j + 1) % 3, j) - 1.0), 1e-12);
    }
    EXPECT_LT(max_abs_diff(x, shift(3)), 1e-12);
}

TEST(pauli, dense_matrix_matches_kronecker_oracle) {
    Rng rng(11);
    for (uint32_t p : {3u, 5u}) {
        for (size_t n = 1; n <= 3; n++) {
            for (int trial = 0; trial < 10; trial++) {
                auto a = random_pauli(p, n, rng);
                EXPECT_LT(max_abs_diff(dense_matrix(a), oracle(a)), 1e-12) << a.str();
            }
        }
    }
}

TEST(pauli, dense_matrix_limit) {
    EXPECT_THROW(checked_dimension(3, 20, 100000), OracleTooLarge);
    EXPECT_EQ(checked_dimension(3, 4, 100000), 81u);
}

TEST(pauli, associativity) {
    Rng rng(1);
    for (uint32_t p : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 1000; trial++) {
            size_t n = 1 + uniform_below(rng, 4);
            auto a = random_pauli(p, n, rng);
            auto b = random_pauli(p, n, rng);
            auto c = random_pauli(p, n, rng);
            ASSERT_EQ(pauli_mul(pauli_mul(a, b), c), pauli_mul(a, pauli_mul(b, c)));
        }
    }
}

TEST(pauli, matrix_homomorphism_all_pairs) {
    const uint32_t p = 3;
    for (size_t n = 1; n <= 2; n++) {
        std::vector<PauliObservable> all;
        size_t count = n == 1 ? 9 : 81;
        for (size_t code = 0; code < count; code++) {
            std::vector<int64_t> x(n), z(n);
            size_t c = code;
            for (size_t q = 0; q < n; q++) {
                x[q] = static_cast<int64_t>(c % p);
                c /= p;
                z[q] = static_cast<int64_t>(c % p);
                c /= p;
            }
            all.emplace_back(p, static_cast<int64_t>(code % p), x, z);
        }
        std::vector<Eigen::MatrixXcd> dense;
        for (const auto &a : all) {
            dense.push_back(dense_matrix(a));
        }
        for (size_t i = 0; i < all.size(); i++) {
            for (size_t j = 0; j < all.size(); j++) {
                ASSERT_LT(max_abs_diff(dense_matrix(pauli_mul(all[i], all[j])), dense[i] * dense[j]), 1e-12);
            }
        }
    }
}

TEST(pauli, commutation_bilinear_antisymmetric) {
    Rng rng(2);
    for (uint32_t p : {3u, 5u, 7u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 300; trial++) {
            size_t n = 1 + uniform_below(rng, 3);
            auto a = random_pauli(p, n, rng);
            auto b = random_pauli(p, n, rng);
            auto c = random_pauli(p, n, rng);
            ASSERT_EQ(commutation_phase(a, pauli_mul(b, c)), f.add(commutation_phase(a, b), commutation_phase(a, c)));
            ASSERT_EQ(commutation_phase(a, b), f.neg(commutation_phase(b, a)));
            // P Q = omega^phi Q P
            auto pq = pauli_mul(a, b);
            auto qp = pauli_mul(b, a);
            qp.set_lambda(static_cast<int64_t>(qp.lambda()) + commutation_phase(a, b));
            ASSERT_EQ(pq, qp);
        }
    }
}

TEST(pauli, pow_p_is_identity) {
    Rng rng(3);
    for (uint32_t p : {3u, 5u, 7u, 11u}) {
        for (int trial = 0; trial < 200; trial++) {
            auto a = random_pauli(p, 1 + uniform_below(rng, 4), rng);
            ASSERT_TRUE(pauli_pow(a, p).is_identity()) << a.str();
        }
    }
}

TEST(pauli, pow_matches_repeated_product) {
    Rng rng(4);
    for (uint32_t p : {3u, 5u}) {
        for (int trial = 0; trial < 100; trial++) {
            auto a = random_pauli(p, 2, rng);
            auto acc = PauliObservable::identity(p, 2);
            for (int64_t k = 0; k < 2 * p; k++) {
                ASSERT_EQ(pauli_pow(a, k), acc);
                acc = pauli_mul(acc, a);
            }
            ASSERT_EQ(pauli_pow(a, -1), pauli_pow(a, p - 1));
        }
    }
}

TEST(pauli, helpers) {
    auto a = PauliObservable(5, 3, {1, 0, 2}, {0, 0, 4});
    EXPECT_EQ(a.weight(), 2u);
    EXPECT_EQ(a.xz_dot(), 3u);
    EXPECT_EQ(a.slice(1, 2), PauliObservable(5, 3, {0, 2}, {0, 4}));
    EXPECT_EQ(a.restricted({2, 0}), PauliObservable(5, 3, {2, 1}, {4, 0}));
    EXPECT_EQ(a.restricted({2, 0}).embedded(3, {2, 0}), a);
    EXPECT_FALSE(a.is_trivial());
    EXPECT_TRUE(PauliObservable(5, 2, {0}, {0}).is_trivial());
    EXPECT_FALSE(PauliObservable(5, 2, {0}, {0}).is_identity());
}
