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

#ifndef QPBC_STABILIZER_STATES_H
#define QPBC_STABILIZER_STATES_H

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qpbc/fp_linalg.h"
#include "qpbc/tableau.h"

namespace qpbc {

/// Stabilizer state with amplitudes p^{-k/2} omega^{y.Q.y + l.y} on |B^T y + b>
/// for y in F_p^k. `basis` holds k rows in reduced row echelon form and
/// `offset` vanishes on the pivot columns.
struct StabilizerStateDesc {
    uint32_t p = 3;
    size_t n = 0;
    FpMatrix basis;
    FpVector offset;
    FpMatrix quad;  // symmetric k x k
    FpVector linear;

    size_t k() const {
        return basis.size();
    }
    bool operator==(const StabilizerStateDesc &other) const noexcept = default;
};

/// p^n prod_{j=1..n} (p^j + 1).
uint64_t stabilizer_state_count(uint32_t p, size_t n);

/// Default cap on enumeration size.
constexpr uint64_t kDefaultEnumerationLimit = 50000;

/// Every n-qudit stabilizer state exactly once. Throws EnumerationTooLarge when
/// the count exceeds `limit`.
std::vector<StabilizerStateDesc> enumerate_stabilizer_states(uint32_t p, size_t n,
                                                             uint64_t limit = kDefaultEnumerationLimit);

Eigen::VectorXcd state_vector(const StabilizerStateDesc &d);

/// The n generators (with phases) stabilizing the described state.
StabilizerTableau tableau_of(const StabilizerStateDesc &d);

/// Binary cache keyed by (p, n, format version). load returns false when the
/// file is missing; throws FormatError when it is corrupt or for another key.
constexpr uint32_t kEnumerationFormatVersion = 1;
void save_enumeration(const std::string &path, uint32_t p, size_t n, const std::vector<StabilizerStateDesc> &states);
bool load_enumeration(const std::string &path, uint32_t p, size_t n, std::vector<StabilizerStateDesc> &states);

}  // namespace qpbc

#endif
