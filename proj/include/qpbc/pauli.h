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

#ifndef QPBC_PAULI_H
#define QPBC_PAULI_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qpbc/field.h"

namespace qpbc {

/// Generalized Pauli operator omega^lambda X(x) Z(z) on n qudits of odd prime
/// dimension p, where X|j> = |j+1> and Z|j> = omega^j |j>.
///
/// Values are canonical (all entries reduced mod p), so equality is structural.
class PauliObservable {
   public:
    PauliObservable(uint32_t p, size_t n);
    PauliObservable(uint32_t p, int64_t lambda, const std::vector<int64_t> &x, const std::vector<int64_t> &z);

    static PauliObservable identity(uint32_t p, size_t n);
    /// X^power on qudit q (phase 1).
    static PauliObservable x_on(uint32_t p, size_t n, size_t q, int64_t power = 1);
    /// Z^power on qudit q (phase 1).
    static PauliObservable z_on(uint32_t p, size_t n, size_t q, int64_t power = 1);

    uint32_t p() const noexcept {
        return p_;
    }
    size_t n() const noexcept {
        return x_.size();
    }
    uint32_t lambda() const noexcept {
        return lambda_;
    }
    const std::vector<uint32_t> &x() const noexcept {
        return x_;
    }
    const std::vector<uint32_t> &z() const noexcept {
        return z_;
    }
    uint32_t x(size_t q) const {
        return x_[q];
    }
    uint32_t z(size_t q) const {
        return z_[q];
    }

    void set_lambda(int64_t v);
    void set_x(size_t q, int64_t v);
    void set_z(size_t q, int64_t v);

    PrimeField field() const {
        return PrimeField(p_);
    }
    /// True when x = z = 0 (any phase).
    bool is_trivial() const noexcept;
    /// True when lambda = 0 and x = z = 0.
    bool is_identity() const noexcept {
        return lambda_ == 0 && is_trivial();
    }
    /// Number of qudits acted on nontrivially.
    size_t weight() const noexcept;
    /// x . z over F_p.
    uint32_t xz_dot() const noexcept;
    /// The same operator with phase set to zero.
    PauliObservable without_phase() const;
    /// Sub-operator on the listed qudits (phase kept).
    PauliObservable restricted(const std::vector<size_t> &qudits) const;
    /// Operator on wires [begin, begin + count) (phase kept).
    PauliObservable slice(size_t begin, size_t count) const;
    /// Embeds into `width` qudits with qudit i placed on wires[i].
    PauliObservable embedded(size_t width, const std::vector<size_t> &wires) const;
    /// Symplectic vector (x | z).
    std::vector<uint32_t> symplectic() const;

    std::string str() const;

    bool operator==(const PauliObservable &other) const noexcept = default;

   private:
    uint32_t p_;
    uint32_t lambda_;
    std::vector<uint32_t> x_;
    std::vector<uint32_t> z_;
};

/// P*Q = omega^(lambda_P + lambda_Q + z_P . x_Q) X(x_P + x_Q) Z(z_P + z_Q).
PauliObservable pauli_mul(const PauliObservable &a, const PauliObservable &b);

/// P^k = omega^(k lambda + k(k-1)/2 x.z) X(kx) Z(kz). Negative k wraps mod p.
PauliObservable pauli_pow(const PauliObservable &a, int64_t k);

/// phi with P*Q = omega^phi Q*P; phi = z_P . x_Q - x_P . z_Q.
uint32_t commutation_phase(const PauliObservable &a, const PauliObservable &b);

inline bool commutes(const PauliObservable &a, const PauliObservable &b) {
    return commutation_phase(a, b) == 0;
}

/// Size cap on dense oracle dimensions (p^n). Default 100000; overridden by
/// the QPBC_ORACLE_LIMIT environment variable.
size_t oracle_limit();

/// Computes p^n, throwing OracleTooLarge when it exceeds `limit`.
size_t checked_dimension(uint32_t p, size_t n, size_t limit);

/// omega^k for omega = exp(2 pi i / order).
std::complex<double> root_of_unity(uint64_t order, int64_t k);

/// Exact tensor-product matrix of omega^lambda X(x) Z(z). Qudit 0 is the most
/// significant digit of the basis index.
Eigen::MatrixXcd dense_matrix(const PauliObservable &pauli);

}  // namespace qpbc

#endif
