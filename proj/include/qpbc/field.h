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

#ifndef QPBC_FIELD_H
#define QPBC_FIELD_H

#include <cstdint>
#include <ostream>

namespace qpbc {

bool is_odd_prime(int64_t n);

/// Arithmetic modulo an odd prime. All results are canonical
/// representatives in [0, p-1].
class PrimeField {
   public:
    /// Throws InvalidModulus unless `p` is an odd prime.
    explicit PrimeField(uint32_t p);

    uint32_t p() const noexcept {
        return p_;
    }
    uint32_t reduce(int64_t a) const noexcept {
        int64_t r = a % static_cast<int64_t>(p_);
        return static_cast<uint32_t>(r < 0 ? r + p_ : r);
    }
    uint32_t add(uint32_t a, uint32_t b) const noexcept {
        uint32_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    uint32_t sub(uint32_t a, uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    uint32_t neg(uint32_t a) const noexcept {
        return a == 0 ? 0 : p_ - a;
    }
    uint32_t mul(uint32_t a, uint32_t b) const noexcept {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t base, uint64_t exponent) const noexcept;
    /// Multiplicative inverse by extended Euclid. Throws InverseOfZero.
    uint32_t inv(uint32_t a) const;
    /// The inverse of 2 in F_p.
    uint32_t half() const noexcept {
        return (p_ + 1) / 2;
    }

    bool operator==(const PrimeField &other) const noexcept = default;

   private:
    uint32_t p_;
};

/// An element of F_p carrying its modulus.
struct FieldElem {
    uint32_t value;
    uint32_t p;

    FieldElem(int64_t v, uint32_t modulus);

    FieldElem operator+(const FieldElem &o) const;
    FieldElem operator-(const FieldElem &o) const;
    FieldElem operator*(const FieldElem &o) const;
    FieldElem operator-() const;
    bool operator==(const FieldElem &o) const noexcept = default;
};

FieldElem fp_inv(const FieldElem &a);

std::ostream &operator<<(std::ostream &out, const FieldElem &a);

}  // namespace qpbc

#endif
