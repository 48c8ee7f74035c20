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

#ifndef QPBC_FP_LINALG_H
#define QPBC_FP_LINALG_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qpbc/field.h"

namespace qpbc {

using FpVector = std::vector<uint32_t>;
using FpMatrix = std::vector<FpVector>;  // row-major, rows of equal length

/// Rank of the row set over F_p.
size_t fp_rank(const PrimeField &f, FpMatrix rows);

/// Finds coefficients k with sum_i k_i rows[i] = target, or nullopt when the
/// target is outside the row span. Free coefficients are set to zero.
std::optional<FpVector> fp_solve_combination(const PrimeField &f, const FpMatrix &rows, const FpVector &target);

/// Basis of {u : rows[i] . u = 0 for all i}.
FpMatrix fp_nullspace(const PrimeField &f, const FpMatrix &rows, size_t width);

}  // namespace qpbc

#endif
