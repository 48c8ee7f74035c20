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

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "qpbc/errors.h"

namespace qpbc {

PauliObservable::PauliObservable(uint32_t p, size_t n) : p_(PrimeField(p).p()), lambda_(0), x_(n, 0), z_(n, 0) {
}

PauliObservable::PauliObservable(uint32_t p, int64_t lambda, const std::vector<int64_t> &x, const std::vector<int64_t> &z)
    : PauliObservable(p, x.size()) {
    if (x.size() != z.size()) {
        throw ShapeError("x and z vectors differ in length");
    }
    PrimeField f(p);
    lambda_ = f.reduce(lambda);
    for (size_t q = 0; q < x.size(); q++) {
        x_[q] = f.reduce(x[q]);
        z_[q] = f.reduce(z[q]);
    }
}

PauliObservable PauliObservable::identity(uint32_t p, size_t n) {
    return PauliObservable(p, n);
}

PauliObservable PauliObservable::x_on(uint32_t p, size_t n, size_t q, int64_t power) {
    PauliObservable r(p, n);
    r.set_x(q, power);
    return r;
}

PauliObservable PauliObservable::z_on(uint32_t p, size_t n, size_t q, int64_t power) {
    PauliObservable r(p, n);
    r.set_z(q, power);
    return r;
}

void PauliObservable::set_lambda(int64_t v) {
    lambda_ = field().reduce(v);
}

void PauliObservable::set_x(size_t q, int64_t v) {
    if (q >= n()) {
        throw IndexError("qudit " + std::to_string(q) + " out of range");
    }
    x_[q] = field().reduce(v);
}

void PauliObservable::set_z(size_t q, int64_t v) {
    if (q >= n()) {
        throw IndexError("qudit " + std::to_string(q) + " out of range");
    }
    z_[q] = field().reduce(v);
}

bool PauliObservable::is_trivial() const noexcept {
    for (size_t q = 0; q < n(); q++) {
        if (x_[q] || z_[q]) {
            return false;
        }
    }
    return true;
}

size_t PauliObservable::weight() const noexcept {
    size_t w = 0;
    for (size_t q = 0; q < n(); q++) {
        w += (x_[q] || z_[q]);
    }
    return w;
}

uint32_t PauliObservable::xz_dot() const noexcept {
    uint64_t acc = 0;
    for (size_t q = 0; q < n(); q++) {
        acc += static_cast<uint64_t>(x_[q]) * z_[q];
    }
    return static_cast<uint32_t>(acc % p_);
}

PauliObservable PauliObservable::without_phase() const {
    PauliObservable r = *this;
    r.lambda_ = 0;
    return r;
}

PauliObservable PauliObservable::restricted(const std::vector<size_t> &qudits) const {
    PauliObservable r(p_, qudits.size());
    r.lambda_ = lambda_;
    for (size_t i = 0; i < qudits.size(); i++) {
        if (qudits[i] >= n()) {
            throw IndexError("qudit " + std::to_string(qudits[i]) + " out of range");
        }
        r.x_[i] = x_[qudits[i]];
        r.z_[i] = z_[qudits[i]];
    }
    return r;
}

PauliObservable PauliObservable::slice(size_t begin, size_t count) const {
    if (begin + count > n()) {
        throw IndexError("slice out of range");
    }
    PauliObservable r(p_, count);
    r.lambda_ = lambda_;
    for (size_t i = 0; i < count; i++) {
        r.x_[i] = x_[begin + i];
        r.z_[i] = z_[begin + i];
    }
    return r;
}

PauliObservable PauliObservable::embedded(size_t width, const std::vector<size_t> &wires) const {
    if (wires.size() != n()) {
        throw ShapeError("embedding needs one wire per qudit");
    }
    PauliObservable r(p_, width);
    r.lambda_ = lambda_;
    for (size_t i = 0; i < wires.size(); i++) {
        if (wires[i] >= width) {
            throw IndexError("wire " + std::to_string(wires[i]) + " out of range");
        }
        r.x_[wires[i]] = x_[i];
        r.z_[wires[i]] = z_[i];
    }
    return r;
}

std::vector<uint32_t> PauliObservable::symplectic() const {
    std::vector<uint32_t> v(x_);
    v.insert(v.end(), z_.begin(), z_.end());
    return v;
}

std::string PauliObservable::str() const {
    std::stringstream ss;
    ss << "w^" << lambda_ << " X(";
    for (size_t q = 0; q < n(); q++) {
        ss << (q ? "," : "") << x_[q];
    }
    ss << ") Z(";
    for (size_t q = 0; q < n(); q++) {
        ss << (q ? "," : "") << z_[q];
    }
    ss << ")";
    return ss.str();
}

static void check_compatible(const PauliObservable &a, const PauliObservable &b) {
    if (a.p() != b.p() || a.n() != b.n()) {
        throw ShapeError("Pauli operands differ in modulus or width: " + a.str() + " vs " + b.str());
    }
}

PauliObservable pauli_mul(const PauliObservable &a, const PauliObservable &b) {
    check_compatible(a, b);
    const size_t n = a.n();
    const uint64_t p = a.p();
    uint64_t lambda = a.lambda() + b.lambda();
    std::vector<int64_t> x(n), z(n);
    for (size_t q = 0; q < n; q++) {
        lambda += static_cast<uint64_t>(a.z(q)) * b.x(q);
        x[q] = a.x(q) + b.x(q);
        z[q] = a.z(q) + b.z(q);
    }
    return PauliObservable(a.p(), static_cast<int64_t>(lambda % p), x, z);
}

PauliObservable pauli_pow(const PauliObservable &a, int64_t k) {
    PrimeField f(a.p());
    uint32_t kk = f.reduce(k);
    // k(k-1)/2 is an integer; reduce before multiplying to stay in range.
    uint64_t tri = (static_cast<uint64_t>(kk) * (kk == 0 ? 0 : kk - 1) / 2) % a.p();
    int64_t lambda = f.add(f.mul(kk, a.lambda()), f.mul(static_cast<uint32_t>(tri), a.xz_dot()));
    std::vector<int64_t> x(a.n()), z(a.n());
    for (size_t q = 0; q < a.n(); q++) {
        x[q] = f.mul(kk, a.x(q));
        z[q] = f.mul(kk, a.z(q));
    }
    return PauliObservable(a.p(), lambda, x, z);
}

uint32_t commutation_phase(const PauliObservable &a, const PauliObservable &b) {
    check_compatible(a, b);
    int64_t acc = 0;
    for (size_t q = 0; q < a.n(); q++) {
        acc += static_cast<int64_t>(a.z(q)) * b.x(q) - static_cast<int64_t>(a.x(q)) * b.z(q);
    }
    return PrimeField(a.p()).reduce(acc);
}

size_t oracle_limit() {
    if (const char *env = std::getenv("QPBC_ORACLE_LIMIT")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<size_t>(v);
        }
    }
    return 100000;
}

size_t checked_dimension(uint32_t p, size_t n, size_t limit) {
    size_t d = 1;
    for (size_t i = 0; i < n; i++) {
        if (d > limit / p) {
            throw OracleTooLarge("dimension " + std::to_string(p) + "^" + std::to_string(n) + " exceeds limit " +
                                 std::to_string(limit));
        }
        d *= p;
    }
    if (d > limit) {
        throw OracleTooLarge("dimension exceeds limit " + std::to_string(limit));
    }
    return d;
}

std::complex<double> root_of_unity(uint64_t order, int64_t k) {
    int64_t r = k % static_cast<int64_t>(order);
    if (r < 0) {
        r += order;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(order));
}

Eigen::MatrixXcd dense_matrix(const PauliObservable &pauli) {
    const uint32_t p = pauli.p();
    const size_t n = pauli.n();
    const size_t d = checked_dimension(p, n, std::min<size_t>(oracle_limit(), 8192));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    std::vector<uint32_t> digits(n, 0);
    for (size_t col = 0; col < d; col++) {
        // X(x) Z(z) |j> = omega^(z.j) |j + x>
        size_t rest = col;
        for (size_t q = n; q-- > 0;) {
            digits[q] = rest % p;
            rest /= p;
        }
        uint64_t phase = pauli.lambda();
        size_t row = 0;
        for (size_t q = 0; q < n; q++) {
            phase += static_cast<uint64_t>(pauli.z(q)) * digits[q];
            row = row * p + (digits[q] + pauli.x(q)) % p;
        }
        m(row, col) = root_of_unity(p, static_cast<int64_t>(phase % p));
    }
    return m;
}

}  // namespace qpbc
