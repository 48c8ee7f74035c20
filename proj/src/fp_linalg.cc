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

#include "qpbc/fp_linalg.h"

#include "qpbc/errors.h"

namespace qpbc {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(const PrimeField &f, FpMatrix &m, size_t width) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < width && row < m.size(); col++) {
        size_t pick = row;
        while (pick < m.size() && m[pick][col] == 0) {
            pick++;
        }
        if (pick == m.size()) {
            continue;
        }
        std::swap(m[row], m[pick]);
        uint32_t scale = f.inv(m[row][col]);
        for (auto &v : m[row]) {
            v = f.mul(v, scale);
        }
        for (size_t r = 0; r < m.size(); r++) {
            if (r == row || m[r][col] == 0) {
                continue;
            }
            uint32_t factor = m[r][col];
            for (size_t c = 0; c < width; c++) {
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
            }
        }
        pivots.push_back(col);
        row++;
    }
    return pivots;
}

}  // namespace

size_t fp_rank(const PrimeField &f, FpMatrix rows) {
    if (rows.empty()) {
        return 0;
    }
    return rref(f, rows, rows[0].size()).size();
}

std::optional<FpVector> fp_solve_combination(const PrimeField &f, const FpMatrix &rows, const FpVector &target) {
    const size_t k = rows.size();
    const size_t width = target.size();
    // Solve A^T k = target: build the augmented system with one row per
    // coordinate and one column per input row.
    FpMatrix sys(width, FpVector(k + 1, 0));
    for (size_t c = 0; c < width; c++) {
        for (size_t i = 0; i < k; i++) {
            if (rows[i].size() != width) {
                throw ShapeError("row width mismatch in linear solve");
            }
            sys[c][i] = rows[i][c] % f.p();
        }
        sys[c][k] = target[c] % f.p();
    }
    auto pivots = rref(f, sys, k + 1);
    if (!pivots.empty() && pivots.back() == k) {
        return std::nullopt;
    }
    FpVector coeffs(k, 0);
    for (size_t r = 0; r < pivots.size(); r++) {
        coeffs[pivots[r]] = sys[r][k];
    }
    return coeffs;
}

FpMatrix fp_nullspace(const PrimeField &f, const FpMatrix &rows, size_t width) {
    FpMatrix m = rows;
    auto pivots = rref(f, m, width);
    std::vector<bool> is_pivot(width, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    FpMatrix basis;
    for (size_t freec = 0; freec < width; freec++) {
        if (is_pivot[freec]) {
            continue;
        }
        FpVector u(width, 0);
        u[freec] = 1;
        for (size_t r = 0; r < pivots.size(); r++) {
            u[pivots[r]] = f.neg(m[r][freec]);
        }
        basis.push_back(std::move(u));
    }
    return basis;
}

}  // namespace qpbc
