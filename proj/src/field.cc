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

#include "qpbc/field.h"

#include "qpbc/errors.h"

namespace qpbc {

bool is_odd_prime(int64_t n) {
    if (n < 3 || n % 2 == 0) {
        return false;
    }
    for (int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (!is_odd_prime(p)) {
        throw InvalidModulus("modulus " + std::to_string(p) + " is not an odd prime");
    }
}

uint32_t PrimeField::pow(uint32_t base, uint64_t exponent) const noexcept {
    uint64_t result = 1 % p_;
    uint64_t b = base % p_;
    while (exponent) {
        if (exponent & 1) {
            result = (result * b) % p_;
        }
        b = (b * b) % p_;
        exponent >>= 1;
    }
    return static_cast<uint32_t>(result);
}

uint32_t PrimeField::inv(uint32_t a) const {
    a %= p_;
    if (a == 0) {
        throw InverseOfZero("0 has no inverse modulo " + std::to_string(p_));
    }
    int64_t old_r = a, r = p_;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return reduce(old_s);
}

FieldElem::FieldElem(int64_t v, uint32_t modulus) : value(0), p(modulus) {
    value = PrimeField(modulus).reduce(v);
}

static void check_same(const FieldElem &a, const FieldElem &b) {
    if (a.p != b.p) {
        throw ShapeError("field elements with different moduli");
    }
}

FieldElem FieldElem::operator+(const FieldElem &o) const {
    check_same(*this, o);
    return FieldElem(static_cast<int64_t>(value) + o.value, p);
}

FieldElem FieldElem::operator-(const FieldElem &o) const {
    check_same(*this, o);
    return FieldElem(static_cast<int64_t>(value) - o.value, p);
}

FieldElem FieldElem::operator*(const FieldElem &o) const {
    check_same(*this, o);
    return FieldElem(static_cast<int64_t>(value) * o.value, p);
}

FieldElem FieldElem::operator-() const {
    return FieldElem(-static_cast<int64_t>(value), p);
}

FieldElem fp_inv(const FieldElem &a) {
    return FieldElem(PrimeField(a.p).inv(a.value), a.p);
}

std::ostream &operator<<(std::ostream &out, const FieldElem &a) {
    return out << a.value << " (mod " << a.p << ")";
}

}  // namespace qpbc
